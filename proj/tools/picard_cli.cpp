// Command-line harness: relator verification, ambiguous-number enumeration,
// closed-path extraction and export, classification, and the property-suite
// runner.  Exit codes: 0 success, 1 property/structure violation, 2 usage.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "picard/checks.hpp"
#include "picard/enumerate.hpp"
#include "picard/graph.hpp"
#include "picard/mobius.hpp"
#include "picard/real_quadratic.hpp"

namespace {

using namespace picard;

int cmd_verify_relators() {
    bool all = true;
    for (const RelatorResult& r : verify_relators()) {
        std::cout << "RELATOR " << r.name << ": " << (r.minus_identity ? "-I" : "+I")
                  << " " << (r.pass ? "PASS" : "FAIL") << "\n";
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

nlohmann::ordered_json triple_json(const RealQuadratic& q) {
    return {{"a", q.a().convert_to<long long>()},
            {"b", q.b().convert_to<long long>()},
            {"c", q.c().convert_to<long long>()}};
}

int cmd_enumerate(long k, bool as_json) {
    EnumerationResult res = enumerate_ambiguous(Int(k));
    if (as_json) {
        nlohmann::ordered_json j;
        j["k"] = k;
        j["count"] = res.members.size();
        j["members"] = nlohmann::ordered_json::array();
        for (const RealQuadratic& q : res.members) j["members"].push_back(triple_json(q));
        j["excluded"] = nlohmann::ordered_json::array();
        for (const ExclusionRecord& e : res.excluded) {
            j["excluded"].push_back({{"candidate", triple_json(e.candidate)},
                                     {"reduced", triple_json(e.reduced)},
                                     {"belongs_to", e.m.convert_to<long long>()}});
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "count: " << res.members.size() << "\n";
    std::cout << "a\tc\td\tvalue\n";
    for (const RealQuadratic& q : res.members) {
        std::cout << q.a() << "\t" << q.c() << "\t" << q.d_int() << "\t" << q.render()
                  << "\n";
    }
    if (!res.excluded.empty()) {
        std::cout << "excluded (belong to a smaller path):\n";
        for (const ExclusionRecord& e : res.excluded) {
            std::cout << "  " << e.candidate.render() << " reduces to "
                      << e.reduced.render() << " (m = " << e.m << ")\n";
        }
    }
    return 0;
}

int cmd_cycles(long k, const std::string& dot_path, const std::string& json_path) {
    AmbiguousGraph g((Int(k)));
    SuiteResult structure = suite_theorem1(g);
    if (!structure.ok) {
        std::cerr << "structural invariant violated: " << structure.witness << "\n";
        return 1;
    }
    auto cycles = g.layer_cycles();
    std::cout << "cycles: " << cycles.size() << " (lengths";
    for (std::size_t j = 0; j < cycles.size(); ++j)
        std::cout << (j ? ", " : " ") << cycles[j].vertices.size();
    std::cout << ")\n";
    if (!dot_path.empty()) {
        std::ofstream out(dot_path, std::ios::binary);
        out << g.export_dot();
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        out << g.export_json();
    }
    return 0;
}

int cmd_classify(long a, long b, long c) {
    RealQuadratic q{Int(a), Int(b), Int(c)};
    AmbiguityClass cls = q.classify();
    std::cout << to_string(cls);
    if (cls != AmbiguityClass::RationalDegenerate) {
        Rational d = q.d_value();
        std::cout << ", d = " << numerator(d);
        if (denominator(d) != 1) std::cout << "/" << denominator(d);
        std::cout << (q.d_integral() ? " (integral)" : " (non-integral)");
    }
    std::cout << "\n";
    return 0;
}

int cmd_check_properties(int k_max, unsigned seed) {
    bool all = true;
    for (const SuiteResult& s : run_property_suites(k_max, seed)) {
        std::cout << "SUITE " << s.name << ": " << s.checked << " checks "
                  << (s.ok ? "PASS" : "FAIL");
        if (!s.detail.empty()) std::cout << " (" << s.detail << ")";
        std::cout << "\n";
        if (!s.ok) {
            std::cerr << "violated: " << s.name << " witness: " << s.witness << "\n";
            all = false;
            break;
        }
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Picard group action on Q(i,√3): ambiguous numbers and their closed path"};
    app.require_subcommand(1);

    app.add_subcommand("verify-relators", "check the eight defining relators");

    long k = 1;
    bool as_json = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "ambiguous numbers (a+k√3)/c");
    enum_cmd->add_option("--k", k, "layer index k")->required()->check(CLI::PositiveNumber);
    enum_cmd->add_flag("--json", as_json, "emit JSON");

    long ck = 1;
    std::string dot_path, json_path;
    auto* cyc_cmd = app.add_subcommand("cycles", "closed path of ambiguous numbers");
    cyc_cmd->add_option("--k", ck, "layer index k")->required()->check(CLI::PositiveNumber);
    cyc_cmd->add_option("--dot", dot_path, "write DOT export");
    cyc_cmd->add_option("--json", json_path, "write JSON export");

    long ca = 0, cb = 0, cc = 1;
    auto* cls_cmd = app.add_subcommand("classify", "classify (a+b√3)/c");
    cls_cmd->add_option("a", ca)->required();
    cls_cmd->add_option("b", cb)->required();
    cls_cmd->add_option("c", cc)->required();

    int k_max = 2;
    unsigned seed = 0;
    auto* chk_cmd = app.add_subcommand("check-properties", "run all property suites");
    chk_cmd->add_option("--k-max", k_max, "largest layer index")
        ->required()
        ->check(CLI::PositiveNumber);
    chk_cmd->add_option("--seed", seed, "random seed")->default_val(0u);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand("verify-relators")) return cmd_verify_relators();
        if (app.got_subcommand("enumerate")) return cmd_enumerate(k, as_json);
        if (app.got_subcommand("cycles")) return cmd_cycles(ck, dot_path, json_path);
        if (app.got_subcommand("classify")) {
            if (cc == 0) {
                std::cerr << "error: c must be nonzero\n";
                return 2;
            }
            return cmd_classify(ca, cb, cc);
        }
        if (app.got_subcommand("check-properties")) return cmd_check_properties(k_max, seed);
    } catch (const picard::PropositionViolation& e) {
        std::cerr << "property violation: " << e.what() << "\n";
        return 1;
    } catch (const picard::ClosureViolation& e) {
        std::cerr << "closure violation: " << e.what() << "\n";
        return 1;
    } catch (const picard::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
