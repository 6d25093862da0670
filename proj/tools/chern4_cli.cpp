// chern4: admissible Chern data and moduli certificates for 4-manifolds.
//
// Verbs operate on a manifold given as a preset name (CP2, K3, E(3),
// 2CP2_3CP2bar, ...) or a path to a model JSON file. Output is
// deterministic: identical invocations produce identical bytes.

#include "chern4/chern.hpp"
#include "chern4/enumeration.hpp"
#include "chern4/errors.hpp"
#include "chern4/json_io.hpp"
#include "chern4/lattice.hpp"
#include "chern4/manifold.hpp"
#include "chern4/moduli.hpp"
#include "chern4/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace chern4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool looks_like_file(const std::string& arg) {
    if (arg.find(".json") != std::string::npos) return true;
    if (arg.find('/') != std::string::npos) return true;
    return false;
}

FourManifoldModel load_manifold(const std::string& arg, bool check) {
    if (!looks_like_file(arg)) return preset(arg);

    std::ifstream in(arg);
    if (!in) throw Error("cannot open " + arg);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const std::exception& e) {
        throw ParseError(arg + ": " + e.what());
    }
    FourManifoldModel m = manifold_from_json(doc);
    if (check) {
        const auto diags = validate(m);
        if (!all_pass(diags)) {
            std::ostringstream os;
            os << arg << " fails validation:";
            for (const Diagnostic& d : diags)
                if (!d.pass) os << " [" << d.check << ": " << d.detail << "]";
            throw Error(os.str());
        }
    }
    return m;
}

CohClass parse_class_csv(const std::string& csv, std::size_t rank) {
    IntVec v;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto a = item.find_first_not_of(" \t");
        const auto b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw UsageError("empty entry in class: " + csv);
        try {
            v.push_back(Int(item.substr(a, b - a + 1)));
        } catch (const std::exception&) {
            throw UsageError("not an integer in class: " + item);
        }
    }
    if (v.size() != rank)
        throw Error("class has " + std::to_string(v.size()) + " entries, lattice rank is " +
                    std::to_string(rank));
    return CohClass(std::move(v));
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::string completeness_str(Completeness c) {
    return c == Completeness::Complete ? "complete" : "window-truncated";
}

void emit(const Json& doc, const std::string& format) {
    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
    }
}

// ---- verb implementations ------------------------------------------------

int run_info(const FourManifoldModel& m, const std::string& format) {
    const bool nondeg = m.lattice.nondegenerate();
    Json doc;
    doc["name"] = m.name;
    doc["rank"] = m.lattice.rank();
    if (nondeg) {
        const SignatureData sig = m.lattice.signature();
        doc["signature"] = Json{{"positive", sig.positive},
                                {"negative", sig.negative},
                                {"sigma", int_to_json(sig.sigma())}};
    }
    doc["determinant"] = int_to_json(m.lattice.determinant());
    std::string defin = "degenerate";
    if (nondeg) {
        switch (m.lattice.definiteness()) {
            case Definiteness::PositiveDefinite: defin = "positive definite"; break;
            case Definiteness::NegativeDefinite: defin = "negative definite"; break;
            case Definiteness::Indefinite: defin = "indefinite"; break;
        }
    }
    doc["definiteness"] = defin;
    doc["euler"] = int_to_json(m.euler);
    doc["sigma"] = int_to_json(m.sigma);
    doc["target"] = int_to_json(m.chern_number_target());
    doc["w2"] = class_to_json(m.w2);
    if (m.fiber) doc["fiber"] = class_to_json(*m.fiber);
    if (m.complex_c1) doc["complex_c1"] = class_to_json(*m.complex_c1);
    doc["simply_connected_profile"] = m.simply_connected_profile();

    if (format == "text") {
        std::cout << "name: " << m.name << "\n";
        std::cout << "rank: " << m.lattice.rank() << "\n";
        if (nondeg) {
            const SignatureData sig = m.lattice.signature();
            std::cout << "signature: (" << sig.positive << ", " << sig.negative << ")\n";
        }
        std::cout << "determinant: " << m.lattice.determinant() << "\n";
        std::cout << "definiteness: " << defin << "\n";
        std::cout << "euler: " << m.euler << "\n";
        std::cout << "sigma: " << m.sigma << "\n";
        std::cout << "target(3*sigma + 2*euler): " << m.chern_number_target() << "\n";
        std::cout << "w2: " << m.w2.to_string() << "\n";
        if (m.fiber) std::cout << "fiber: " << m.fiber->to_string() << "\n";
        if (m.complex_c1)
            std::cout << "complex_c1: " << m.complex_c1->to_string() << "\n";
        std::cout << "simply_connected_profile: "
                  << yesno(m.simply_connected_profile()) << "\n";
    }
    emit(doc, format);
    return 0;
}

int run_enumerate(const FourManifoldModel& m, const Int& window,
                  const std::string& format) {
    const EnumerationProblem problem(m.lattice, m.chern_number_target(), m.w2, window);
    const EnumerationResult result = enumerate_solutions(problem);

    Json doc;
    doc["manifold"] = m.name;
    doc["target"] = int_to_json(problem.target);
    doc["parity"] = class_to_json(problem.parity);
    doc["window"] = int_to_json(problem.window);
    doc["completeness"] = completeness_str(result.completeness());
    doc["count"] = result.solutions().size();
    Json sols = Json::array();
    for (const CohClass& c : result.solutions()) {
        Json s;
        s["coords"] = class_to_json(c);
        s["pretty"] = render_class(m.lattice, c);
        sols.push_back(std::move(s));
    }
    doc["solutions"] = std::move(sols);
    doc["infinitude_hint"] = result.infinitude_hint()
                                 ? class_to_json(*result.infinitude_hint())
                                 : Json(nullptr);

    if (format == "text") {
        std::cout << "manifold: " << m.name << "\n";
        std::cout << "target: " << problem.target << "\n";
        std::cout << "parity: " << problem.parity.to_string() << "\n";
        std::cout << "window: " << problem.window << "\n";
        std::cout << "completeness: " << completeness_str(result.completeness()) << "\n";
        std::cout << "count: " << result.solutions().size() << "\n";
        for (const CohClass& c : result.solutions())
            std::cout << "c1: " << render_class(m.lattice, c) << "\n";
        if (result.infinitude_hint())
            std::cout << "infinitude_hint: " << result.infinitude_hint()->to_string()
                      << "\n";
    }
    emit(doc, format);
    return 0;
}

int run_chern_list(const FourManifoldModel& m, const Int& window, bool generalized,
                   const std::string& format) {
    const AdmissibleChern list = generalized ? gc_admissible_chern(m, window)
                                             : admissible_ac_chern(m, window);
    Json doc;
    doc["manifold"] = m.name;
    doc["completeness"] = completeness_str(list.completeness);
    doc["count"] = list.values.size();
    if (generalized)
        doc["conjugation_classes"] = conjugation_class_count(list.values);
    Json values = Json::array();
    for (const ChernData& d : list.values) values.push_back(chern_to_json(m.lattice, d));
    doc["values"] = std::move(values);

    if (format == "text") {
        std::cout << "manifold: " << m.name << "\n";
        std::cout << "completeness: " << completeness_str(list.completeness) << "\n";
        std::cout << "count: " << list.values.size() << "\n";
        if (generalized)
            std::cout << "conjugation_classes: " << conjugation_class_count(list.values)
                      << "\n";
        for (const ChernData& d : list.values)
            std::cout << "chern: " << render_chern(m.lattice, d) << "\n";
    }
    emit(doc, format);
    return 0;
}

void print_invariants_text(const OrbitInvariants& inv) {
    std::cout << "square: " << inv.square << "\n";
    std::cout << "divisibility: " << inv.divisibility << "\n";
    std::cout << "characteristic: " << yesno(inv.characteristic) << "\n";
    std::cout << "primitive: " << yesno(inv.primitive) << "\n";
}

int run_orbit(const FourManifoldModel& m, const std::string& cls,
              const std::string& other, const std::string& format) {
    const CohClass x = parse_class_csv(cls, m.lattice.rank());
    const OrbitInvariants inv = orbit_invariants(m.lattice, x);

    Json doc;
    doc["manifold"] = m.name;
    doc["class"] = class_to_json(x);
    doc["invariants"] = invariants_to_json(inv);
    if (format == "text") {
        std::cout << "manifold: " << m.name << "\n";
        std::cout << "class: " << x.to_string() << "\n";
        print_invariants_text(inv);
    }
    if (!other.empty()) {
        const CohClass y = parse_class_csv(other, m.lattice.rank());
        const OrbitInvariants inv2 = orbit_invariants(m.lattice, y);
        const char* verdict = distinguish(m.lattice, x, y) == OrbitVerdict::DistinctOrbits
                                  ? "distinct_orbits"
                                  : "inconclusive";
        doc["other"] = class_to_json(y);
        doc["other_invariants"] = invariants_to_json(inv2);
        doc["verdict"] = verdict;
        if (format == "text") {
            std::cout << "other: " << y.to_string() << "\n";
            print_invariants_text(inv2);
            std::cout << "verdict: " << verdict << "\n";
        }
    }
    emit(doc, format);
    return 0;
}

int run_log_transform(const FourManifoldModel& m, const Int& k,
                      const std::string& format) {
    const CanonicalClass c = log_transform_canonical(m, k);
    Json doc;
    doc["manifold"] = m.name;
    doc["k"] = int_to_json(k);
    doc["c1K"] = class_to_json(c.c1K);
    doc["pretty"] = render_class(m.lattice, c.c1K);
    if (format == "text") {
        std::cout << "manifold: " << m.name << "\n";
        std::cout << "k: " << k << "\n";
        std::cout << "c1K: " << c.c1K.to_string() << "\n";
    }
    emit(doc, format);
    return 0;
}

int run_certify_infinite(const FourManifoldModel& m, const Int& kmax,
                         const std::string& format) {
    const InfinitudeCertificate cert = infinite_components_certificate(m, kmax);
    if (format == "text") {
        std::cout << "manifold: " << cert.manifold << "\n";
        std::cout << "kmax: " << kmax << "\n";
        std::cout << "verdict: " << (cert.verified ? "verified" : "unverified") << "\n";
        std::cout << "entries: " << cert.entries.size() << "\n";
        for (const InfinitudeEntry& e : cert.entries) {
            std::cout << "k=" << e.k << " square=" << e.invariants.square
                      << " divisibility=" << e.invariants.divisibility
                      << " characteristic=" << yesno(e.invariants.characteristic)
                      << " primitive=" << yesno(e.invariants.primitive)
                      << " c1K=" << e.canonical.c1K.to_string() << "\n";
        }
    }
    emit(infinitude_to_json(m.lattice, cert), format);
    return 0;
}

int run_certify_finite(const FourManifoldModel& m, const Int& window,
                       const std::string& format) {
    const FinitenessCertificate cert = finiteness_certificate(m, window);
    if (format == "text") {
        std::cout << "manifold: " << cert.manifold << "\n";
        std::cout << "verdict: "
                  << (cert.verdict == FinitenessVerdict::Finite ? "finite"
                                                                : "not_applicable")
                  << "\n";
        std::cout << "completeness: " << completeness_str(cert.chern.completeness)
                  << "\n";
        std::cout << "count: " << cert.chern.values.size() << "\n";
        for (const ChernData& d : cert.chern.values)
            std::cout << "chern: " << render_chern(m.lattice, d) << "\n";
    }
    emit(finiteness_to_json(m.lattice, cert), format);
    return 0;
}

int run_validate(const FourManifoldModel& m, const std::string& format) {
    const auto diags = validate(m);
    const bool ok = all_pass(diags);
    Json doc;
    doc["manifold"] = m.name;
    doc["checks"] = diagnostics_to_json(diags);
    doc["all_pass"] = ok;
    if (format == "text") {
        std::cout << "manifold: " << m.name << "\n";
        for (const Diagnostic& d : diags)
            std::cout << "check " << d.check << ": " << (d.pass ? "pass" : "FAIL")
                      << " (" << d.detail << ")\n";
        std::cout << "result: " << (ok ? "all checks passed" : "validation failed")
                  << "\n";
    }
    emit(doc, format);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"admissible Chern data and moduli certificates for 4-manifolds"};
    app.require_subcommand(1);

    std::string manifold_arg, format = "text", cls, other;
    std::int64_t window = 8, kmax = 10, k = 1;

    const auto add_common = [&](CLI::App* sub, bool with_window) {
        sub->add_option("manifold", manifold_arg,
                        "preset name or model JSON path")
            ->required();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        if (with_window)
            sub->add_option("--window", window,
                            "per-coordinate bound for indefinite forms")
                ->check(CLI::Range(std::int64_t(0), std::int64_t(1) << 20))
                ->capture_default_str();
        return sub;
    };

    auto* s_info = add_common(app.add_subcommand("info", "lattice and model summary"), false);
    auto* s_enum = add_common(
        app.add_subcommand("enumerate-c1", "admissible first Chern classes"), true);
    auto* s_ac = add_common(
        app.add_subcommand("ac-chern", "Chern polynomials of almost complex structures"),
        true);
    auto* s_gc = add_common(
        app.add_subcommand("gc-chern",
                           "Chern polynomials of generalized complex structures"),
        true);
    auto* s_orbit = add_common(
        app.add_subcommand("orbit", "Diff-orbit invariants of a degree-2 class"), false);
    s_orbit->add_option("--class", cls, "comma-separated coordinates")->required();
    s_orbit->add_option("--other", other, "second class to compare against");
    auto* s_log = add_common(
        app.add_subcommand("log-transform",
                           "canonical class after k logarithmic transforms"),
        false);
    s_log->add_option("-k,--k", k, "number of multiplicity-one transforms")
        ->check(CLI::Range(std::int64_t(0), std::int64_t(1) << 40))
        ->capture_default_str();
    auto* s_inf = add_common(
        app.add_subcommand("certify-infinite",
                           "witness infinitely many moduli components"),
        false);
    s_inf->add_option("--kmax", kmax, "largest transform count in the certificate")
        ->check(CLI::Range(std::int64_t(2), std::int64_t(1) << 20))
        ->capture_default_str();
    auto* s_fin = add_common(
        app.add_subcommand("certify-finite",
                           "certify a finite generalized complex Chern image"),
        true);
    auto* s_val =
        add_common(app.add_subcommand("validate", "check model invariants"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        // validate is the verb that reports on broken files, so it loads
        // without the up-front invariant gate.
        const bool gate = !s_val->parsed();
        const FourManifoldModel m = load_manifold(manifold_arg, gate);
        if (s_info->parsed()) return run_info(m, format);
        if (s_enum->parsed()) return run_enumerate(m, Int(window), format);
        if (s_ac->parsed()) return run_chern_list(m, Int(window), false, format);
        if (s_gc->parsed()) return run_chern_list(m, Int(window), true, format);
        if (s_orbit->parsed()) return run_orbit(m, cls, other, format);
        if (s_log->parsed()) return run_log_transform(m, Int(k), format);
        if (s_inf->parsed()) return run_certify_infinite(m, Int(kmax), format);
        if (s_fin->parsed()) return run_certify_finite(m, Int(window), format);
        if (s_val->parsed()) return run_validate(m, format);
        std::cerr << "error: no verb\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
