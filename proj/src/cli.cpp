#include "roots/cli.hpp"

#include "roots/json_io.hpp"

#include <CLI11.hpp>

#include <map>
#include <sstream>

namespace roots::cli {

namespace {

constexpr int kOk = 0;
constexpr int kUnexpected = 1;
constexpr int kBadInput = 2;

std::string norm_summary(const RootSet& s) {
    std::map<Rational, std::size_t> counts;
    for (std::size_t i = 0; i < s.size(); ++i)
        ++counts[s.norm(i)];
    std::string out = "{";
    bool first = true;
    for (const auto& [norm, count] : counts) {
        if (!first)
            out += ", ";
        first = false;
        out += to_string(norm) + ": " + std::to_string(count);
    }
    return out + "}";
}

std::string identification_summary(const catalog::IdentificationResult& id) {
    std::string out;
    for (const auto& c : id.components) {
        if (!out.empty())
            out += " + ";
        out += c.id.name();
    }
    return out.empty() ? "(empty)" : out;
}

void print_report_text(const verify::Report& r, std::ostream& out) {
    out << r.claim << ": " << verify::status_name(r.status) << "\n";
    for (const auto& s : r.steps) {
        if (s.checked)
            out << "  [" << (s.passed ? "ok" : "FAIL") << "] " << s.op << ": " << s.assertion
                << "\n";
        else
            out << "  [note] " << s.op << ": " << s.assertion << "\n";
    }
}

int report_exit(const verify::Report& r) {
    return r.status == verify::expected_status(r) ? kOk : kUnexpected;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact root-system toolkit: catalogs, closures, admissibility, weight "
                 "configurations, and the verification suites"};
    app.name("rootsys");

    std::size_t max_size = kDefaultClosureMaxSize;
    bool as_json = false;

    auto* cat = app.add_subcommand("catalog", "build a named root system");
    std::string cat_family;
    std::size_t cat_rank = 0;
    cat->add_option("family", cat_family, "family letter A..G")->required();
    cat->add_option("rank", cat_rank, "rank")->required();
    cat->add_flag("--json", as_json, "emit JSON");

    auto* clo = app.add_subcommand("closure", "close a root set under its own reflections");
    std::string clo_file;
    clo->add_option("file", clo_file, "root-set JSON file")->required();
    clo->add_option("--max-size", max_size, "growth guard");
    clo->add_flag("--json", as_json, "emit JSON");

    auto* adm = app.add_subcommand("admissible", "test admissibility of a subsystem");
    std::string adm_file;
    adm->add_option("file", adm_file, "root-set JSON file")->required();
    adm->add_flag("--json", as_json, "emit JSON");

    auto* ident = app.add_subcommand("identify", "identify a root system by type");
    std::string ident_file;
    ident->add_option("file", ident_file, "root-set JSON file")->required();
    ident->add_flag("--json", as_json, "emit JSON");

    auto* wts = app.add_subcommand("weights", "assemble a spin weight configuration");
    std::string wts_shape, wts_file;
    wts->add_option("--shape", wts_shape, "configuration shape I..IV")->required();
    wts->add_option("--config", wts_file, "weight-config JSON file")->required();
    wts->add_flag("--json", as_json, "emit JSON");

    auto* ver = app.add_subcommand("verify", "run the verification suites");
    ver->require_subcommand(1);
    auto* vg = ver->add_subcommand("lemma-gram", "Gram classification at q generators");
    std::size_t vg_q = 0;
    vg->add_option("--q", vg_q, "generator count: 3, 4 or 8")->required();
    vg->add_flag("--json", as_json, "emit JSON");
    auto* vp = ver->add_subcommand("prop-bounds", "maximal-q feasibility bounds");
    std::string vp_case;
    vp->add_option("--case", vp_case, "P1, P2, P3 or P4")->required();
    vp->add_flag("--json", as_json, "emit JSON");
    auto* vt = ver->add_subcommand("theorem", "limiting-case assembly");
    std::string vt_case;
    vt->add_option("--case", vt_case, "I, II, III or IV")->required();
    vt->add_flag("--json", as_json, "emit JSON");
    auto* vr = ver->add_subcommand("r14", "rank-14 exclusion");
    vr->add_flag("--json", as_json, "emit JSON");
    auto* va = ver->add_subcommand("all", "every suite");
    std::string va_filter;
    va->add_option("--filter", va_filter, "restrict to one kind: lemma-gram, prop-bounds, theorem, r14");
    va->add_flag("--json", as_json, "emit JSON");

    std::vector<const char*> argv;
    argv.push_back("rootsys");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }

    try {
        if (*cat) {
            catalog::Family family;
            try {
                if (cat_family.size() != 1)
                    throw std::invalid_argument("family must be a single letter A..G");
                family = catalog::family_from_char(cat_family[0]);
                if (!catalog::is_valid(family, cat_rank))
                    throw std::invalid_argument("no system " + cat_family +
                                                std::to_string(cat_rank) + " in the catalog");
            } catch (const std::exception& e) {
                err << "error: " << e.what() << "\n";
                return kBadInput;
            }
            RootSet s = catalog::build(family, cat_rank);
            if (as_json)
                out << io::rootset_to_json(s).dump(2) << "\n";
            else
                out << cat_family << cat_rank << ": " << s.size() << " roots in dimension "
                    << s.basis_form().dim() << ", norms " << norm_summary(s) << "\n";
            return kOk;
        }
        if (*clo) {
            RootSet input = io::rootset_from_json(io::parse_file(clo_file), "input");
            RootSet closed = closure(input, max_size);
            RootSet complement = closed.set_difference(input);
            if (as_json) {
                io::json payload;
                payload["closure"] = io::rootset_to_json(closed);
                payload["complement"] = io::rootset_to_json(complement);
                out << payload.dump(2) << "\n";
            } else {
                out << "closure: " << closed.size() << " roots (" << complement.size()
                    << " new), norms " << norm_summary(closed) << "\n";
            }
            return kOk;
        }
        if (*adm) {
            RootSet input = io::rootset_from_json(io::parse_file(adm_file), "input");
            auto result = is_admissible(input, max_size);
            io::json payload;
            payload["admissible"] = result.admissible;
            payload["complement"] = io::rootset_to_json(result.complement);
            std::string complement_name = "(empty)";
            if (!result.complement.empty() && result.admissible) {
                auto id = catalog::identify(result.complement);
                payload["complement_identification"] = io::identification_to_json(id);
                complement_name = identification_summary(id);
            }
            if (as_json)
                out << payload.dump(2) << "\n";
            else
                out << "admissible: " << (result.admissible ? "yes" : "no") << "; complement has "
                    << result.complement.size() << " roots"
                    << (result.admissible ? " identified as " + complement_name : "") << "\n";
            return kOk;
        }
        if (*ident) {
            RootSet input = io::rootset_from_json(io::parse_file(ident_file), "input");
            auto check = is_root_system(input);
            if (!check.ok) {
                err << "error: input is not a root system; first violation: "
                    << check.violations.front().describe() << "\n";
                return kBadInput;
            }
            auto id = catalog::identify(input);
            if (as_json)
                out << io::identification_to_json(id).dump(2) << "\n";
            else
                out << identification_summary(id) << " (" << id.total_roots << " roots)\n";
            return kOk;
        }
        if (*wts) {
            weights::Shape shape;
            try {
                shape = weights::shape_from_name(wts_shape);
            } catch (const std::exception& e) {
                err << "error: " << e.what() << "\n";
                return kBadInput;
            }
            auto cfg = io::weight_config_from_json(io::parse_file(wts_file), "config");
            if (cfg.shape != shape)
                throw io::ParseError("config shape " + weights::shape_name(cfg.shape) +
                                     " does not match --shape " + wts_shape);
            RootSet w = weights::build_weights(cfg);
            if (as_json)
                out << io::rootset_to_json(w).dump(2) << "\n";
            else
                out << "shape " << wts_shape << ": " << w.size() << " weights, norms "
                    << norm_summary(w) << "\n";
            return kOk;
        }
        if (*ver) {
            if (*va) {
                std::optional<std::string> filter;
                if (!va_filter.empty()) {
                    if (va_filter != "lemma-gram" && va_filter != "prop-bounds" &&
                        va_filter != "theorem" && va_filter != "r14") {
                        err << "error: unknown filter '" << va_filter << "'\n";
                        return kBadInput;
                    }
                    filter = va_filter;
                }
                auto agg = verify::verify_all(filter);
                if (as_json) {
                    out << io::aggregate_to_json(agg).dump(2) << "\n";
                } else {
                    for (const auto& r : agg.reports)
                        out << r.claim << ": " << verify::status_name(r.status)
                            << (r.status == verify::expected_status(r) ? "" : " (unexpected)")
                            << "\n";
                    out << (agg.all_expected ? "all reports match their expected status"
                                             : "some reports are unexpected")
                        << " (" << agg.reports.size() << " reports)\n";
                }
                return agg.all_expected ? kOk : kUnexpected;
            }
            verify::Report report;
            if (*vg) {
                if (vg_q != 3 && vg_q != 4 && vg_q != 8) {
                    err << "error: lemma-gram runs at q in {3, 4, 8}\n";
                    return kBadInput;
                }
                report = verify::gram_classification_report(vg_q);
            } else if (*vp) {
                gram::BoundCase c;
                try {
                    c = gram::bound_case_from_name(vp_case);
                } catch (const std::exception& e) {
                    err << "error: " << e.what() << "\n";
                    return kBadInput;
                }
                report = verify::prop_bounds_report(c);
            } else if (*vt) {
                verify::LimitCaseId id;
                try {
                    id = verify::limit_case_from_name(vt_case);
                } catch (const std::exception& e) {
                    err << "error: " << e.what() << "\n";
                    return kBadInput;
                }
                report = verify::verify_limit_case(id);
            } else {
                report = verify::exclude_r14();
            }
            if (as_json)
                out << io::report_to_json(report).dump(2) << "\n";
            else
                print_report_text(report, out);
            return report_exit(report);
        }
    } catch (const io::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const NotASubsystemError& e) {
        err << "error: not a subsystem of roots: " << e.what() << "\n";
        return kBadInput;
    } catch (const SizeExceededError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const catalog::UnrecognizedSystemError& e) {
        err << "error: unrecognized system: " << e.what() << "\n";
        return kBadInput;
    } catch (const weights::DuplicateWeightError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
    err << "error: no command given (try --help)\n";
    return kBadInput;
}

}  // namespace roots::cli
