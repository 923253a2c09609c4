#include "m1n/cli.hpp"

#include "m1n/cremona.hpp"
#include "m1n/curves.hpp"
#include "m1n/forgetful.hpp"
#include "m1n/hain.hpp"
#include "m1n/json_io.hpp"
#include "m1n/reid_tai.hpp"
#include "m1n/sweeps.hpp"
#include "m1n/sym.hpp"
#include "m1n/torsion.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace m1n::cli {

namespace {

std::vector<long long> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail(errc::bad_input, flag + " expects comma-separated integers, got '" + item + "'");
        }
    }
    if (out.empty()) fail(errc::bad_input, flag + " expects a nonempty comma-separated list");
    return out;
}

std::vector<int> parse_label_list(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    for (long long v : parse_int_list(text, flag)) out.push_back(static_cast<int>(v));
    return out;
}

// n is inferred from the list length unless --n pads with zeros.
Signature signature_from_flag(const std::string& text, int n_flag) {
    auto entries = parse_int_list(text, "--a");
    if (n_flag > 0) {
        if (n_flag < static_cast<int>(entries.size()))
            fail(errc::bad_input, "--n is smaller than the signature length");
        entries.resize(static_cast<size_t>(n_flag), 0);
    }
    return Signature(std::move(entries));
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::bad_input, "cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(errc::bad_input, "invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

struct ClassArgs {
    std::string a;
    int n = 0;
    int psi = 0;
    bool canonical = false;
    bool delta_irr = false;
    std::string relabel_image;
};

int run_class(const ClassArgs& args, bool json, std::ostream& out) {
    int modes = !args.a.empty();
    modes += args.canonical;
    modes += args.delta_irr;
    modes += args.psi > 0;
    if (modes != 1)
        fail(errc::bad_input, "choose exactly one of --a, --canonical, --psi, --delta-irr");
    DivisorClass d(1);
    if (!args.a.empty()) {
        d = hain_class(signature_from_flag(args.a, args.n));
    } else {
        if (args.n <= 0) fail(errc::bad_input, "--n is required for this mode");
        if (args.canonical) d = canonical_class(args.n);
        if (args.delta_irr) d = delta_irr_class(args.n);
        if (args.psi > 0) d = psi_class(args.n, args.psi);
    }
    if (!args.relabel_image.empty())
        d = relabel(Permutation(parse_label_list(args.relabel_image, "--relabel")), d);
    if (json)
        emit(out, divisor_to_json(d));
    else
        out << d.str() << "\n";
    return 0;
}

struct FamilyArgs {
    std::string file, a;
    int i = 1, j = 2;
};

int run_family(const FamilyArgs& args, bool json, std::ostream& out) {
    if (args.file.empty()) fail(errc::bad_input, "--file (family JSON) is required");
    FamilyData f = family_from_json(read_json_file(args.file));
    FamilyInvariants inv = family_invariants(f, args.i, args.j);

    std::optional<Rat> grr;
    if (!args.a.empty()) grr = grr_degree(Signature(parse_int_list(args.a, "--a")), f);

    if (json) {
        Json j{{"omega_sq", rat_str(inv.omega_sq)},
               {"sigma_i_dot_sigma_j", rat_str(inv.sigma_i_dot_sigma_j)},
               {"omega_dot_sigma_i", rat_str(inv.omega_dot_sigma_i)},
               {"psi_degree_i", rat_str(inv.psi_degree_i)},
               {"curve", curve_to_json(family_curve_class(f))}};
        if (grr) j["grr_degree"] = rat_str(*grr);
        emit(out, j);
    } else {
        out << "omega^2 = " << rat_pretty(inv.omega_sq) << "\n";
        out << "sigma_" << args.i << " . sigma_" << args.j << " = "
            << rat_pretty(inv.sigma_i_dot_sigma_j) << "\n";
        out << "omega . sigma_" << args.i << " = " << rat_pretty(inv.omega_dot_sigma_i) << "\n";
        out << "deg psi_" << args.i << " = " << rat_pretty(inv.psi_degree_i) << "\n";
        if (grr) out << "grr degree = " << rat_pretty(*grr) << "\n";
    }
    return 0;
}

int run_components(const std::string& a_flag, int n_flag, bool json, std::ostream& out) {
    Signature a = signature_from_flag(a_flag, n_flag);
    long long count = component_count(a);
    Signature core = a.all_nonzero() ? a : a.stripped();

    Json parts = Json::array();
    bool decomposed = core.n() >= 3;
    if (decomposed)
        for (const auto& [t, part] : decompose(core))
            parts.push_back({{"t", t}, {"class", divisor_to_json(part)}});

    if (json) {
        Json j{{"signature", signature_to_json(a)},
               {"gcd", core.gcd()},
               {"components", count},
               {"parts", std::move(parts)}};
        if (core.n() != a.n()) j["stripped"] = signature_to_json(core);
        emit(out, j);
        return 0;
    }
    out << "D_" << a.str() << ": " << count << " irreducible component" << (count == 1 ? "" : "s")
        << " (gcd " << core.gcd() << ", eta " << eta(core.gcd()) << ")\n";
    if (core.n() != a.n())
        out << "zero entries dropped: computing on " << core.str() << "\n";
    if (!decomposed) {
        out << "component classes are not computed for two-pointed signatures\n";
        return 0;
    }
    for (const auto& [t, part] : decompose(core)) out << "t = " << t << ": " << part.str() << "\n";
    return 0;
}

struct PairArgs {
    std::string curve_file, divisor_file, x_curve, a, delta;
    int n = 0;
};

int run_pair(const PairArgs& args, bool json, std::ostream& out) {
    CurveClass c(1);
    if (!args.curve_file.empty())
        c = curve_from_json(read_json_file(args.curve_file));
    else if (!args.x_curve.empty())
        c = moving_test_curve(signature_from_flag(args.x_curve, 0));
    else
        fail(errc::bad_input, "provide a curve via --curve or --x-curve");

    DivisorClass d(1);
    if (!args.divisor_file.empty()) {
        d = divisor_from_json(read_json_file(args.divisor_file));
    } else if (!args.a.empty()) {
        d = hain_class(signature_from_flag(args.a, args.n));
    } else if (!args.delta.empty()) {
        int n = args.n > 0 ? args.n : c.n();
        d = boundary_class(n, subset_from_labels(parse_label_list(args.delta, "--delta"), n));
    } else {
        fail(errc::bad_input, "provide a divisor via --divisor, --a or --delta");
    }

    Rat value = pairing(c, d);
    if (json)
        emit(out, Json{{"pairing", rat_str(value)}});
    else
        out << rat_pretty(value) << "\n";
    return 0;
}

struct PullbackArgs {
    std::string a, divisor_file, keep;
    int n = 0;
};

int run_pullback(const PullbackArgs& args, bool json, std::ostream& out) {
    if (args.n <= 0) fail(errc::bad_input, "--n (target point count) is required");
    DivisorClass d(1);
    if (!args.divisor_file.empty())
        d = divisor_from_json(read_json_file(args.divisor_file));
    else if (!args.a.empty())
        d = hain_class(Signature(parse_int_list(args.a, "--a")));
    else
        fail(errc::bad_input, "provide a divisor via --a or --divisor");

    std::vector<int> keep =
        args.keep.empty() ? inclusion_keep(d.n()) : parse_label_list(args.keep, "--keep");
    DivisorClass result = pullback(d, args.n, keep);
    if (json)
        emit(out, divisor_to_json(result));
    else
        out << result.str() << "\n";
    return 0;
}

struct CertifyArgs {
    std::string a;
    bool pullback_mode = false;
    int n = 0;
    long long ray = 0;
    std::string divisor_file, curve_file, irreducible_cite, moving_cite;
};

int print_certificate(const CertificateReport& report, bool json, std::ostream& out) {
    if (json) {
        emit(out, certificate_to_json(report));
    } else {
        out << "pairing " << rat_pretty(report.pairing) << ", verdict "
            << (report.valid ? "valid" : "invalid") << "\n";
        for (const auto& fact : report.assumptions)
            out << "assumed [" << fact.tag << "] " << fact.citation << "\n";
    }
    return report.valid ? 0 : 1;
}

int run_certify(const CertifyArgs& args, bool json, std::ostream& out) {
    if (args.ray > 0) {
        RayFamily fam = extremal_ray_family(args.ray);
        bool proportional_ok = fam.hain == make_rat(args.ray * (args.ray + 1)) * fam.ray;
        if (json) {
            emit(out, Json{{"signature", signature_to_json(fam.signature)},
                           {"hain", divisor_to_json(fam.hain)},
                           {"ray", divisor_to_json(fam.ray)},
                           {"factor", std::to_string(args.ray * (args.ray + 1)) + "/1"},
                           {"proportional", proportional_ok}});
        } else {
            out << "signature " << fam.signature.str() << "\n";
            out << "class     " << fam.hain.str() << "\n";
            out << "ray       " << fam.ray.str() << "\n";
            out << "class = " << args.ray * (args.ray + 1) << " * ray: "
                << (proportional_ok ? "yes" : "NO") << "\n";
        }
        return proportional_ok ? 0 : 1;
    }
    if (!args.divisor_file.empty() || !args.curve_file.empty()) {
        // generic checker over user-supplied classes; the geometric facts are
        // whatever the caller is willing to cite
        if (args.divisor_file.empty() || args.curve_file.empty())
            fail(errc::bad_input, "generic certificates need both --divisor and --curve");
        std::optional<AssertedFact> irreducible, moving;
        if (!args.irreducible_cite.empty())
            irreducible = AssertedFact{kIrreducibleTag, args.irreducible_cite};
        if (!args.moving_cite.empty()) moving = AssertedFact{kMovingTag, args.moving_cite};
        CertificateReport report =
            certify_extremal(divisor_from_json(read_json_file(args.divisor_file)),
                             curve_from_json(read_json_file(args.curve_file)), std::move(irreducible),
                             std::move(moving));
        return print_certificate(report, json, out);
    }
    if (args.a.empty()) fail(errc::bad_input, "provide --a (or --ray K)");

    if (args.pullback_mode) {
        auto pair_entries = parse_int_list(args.a, "--a");
        if (pair_entries.size() != 2)
            fail(errc::bad_input, "--pullback certifies a pair: --a a1,a2");
        if (args.n < 3) fail(errc::bad_input, "--n >= 3 is required with --pullback");
        return print_certificate(pulled_back_certificate(args.n, pair_entries[0], pair_entries[1]),
                                 json, out);
    }

    Signature a = signature_from_flag(args.a, 0);
    CurveClass x = moving_test_curve(a);
    std::optional<AssertedFact> irreducible;
    if (a.primitive()) irreducible = default_irreducibility_fact(a);
    CertificateReport report =
        certify_extremal(hain_class(a), x, std::move(irreducible), default_moving_fact(a));
    return print_certificate(report, json, out);
}

int run_reduce(const std::string& a_flag, bool json, std::ostream& out) {
    ReductionTrace trace = reduce_signature(Signature(parse_int_list(a_flag, "--a")));
    if (json) {
        emit(out, trace_to_json(trace));
        return 0;
    }
    Signature cur = trace.start;
    out << "start " << cur.str() << "\n";
    for (const auto& move : trace.steps) {
        cur = apply_move(cur, move);
        switch (move.kind) {
            case MoveKind::permute: {
                out << "permute [";
                const auto& img = move.p->image();
                for (size_t i = 0; i < img.size(); ++i) out << (i ? "," : "") << img[i];
                out << "] -> " << cur.str() << "\n";
                break;
            }
            case MoveKind::negate: out << "negate -> " << cur.str() << "\n"; break;
            case MoveKind::f_transform: out << "f -> " << cur.str() << "\n"; break;
        }
    }
    out << "end " << trace.end.str() << " in " << trace.steps.size() << " moves\n";
    return 0;
}

struct FstarArgs {
    std::string a, delta, divisor_file, signature;
    bool lambda = false;
};

int run_fstar(const FstarArgs& args, bool inverse, bool json, std::ostream& out) {
    if (!args.signature.empty()) {
        if (inverse) fail(errc::bad_input, "--signature is only defined for the forward map");
        Signature moved = cremona_signature_map(Signature(parse_int_list(args.signature, "--signature")));
        if (json)
            emit(out, signature_to_json(moved));
        else
            out << moved.str() << "\n";
        return 0;
    }
    DivisorClass d(3);
    int modes = !args.a.empty();
    modes += !args.delta.empty();
    modes += !args.divisor_file.empty();
    modes += args.lambda;
    if (modes != 1)
        fail(errc::bad_input, "choose exactly one of --a, --delta, --lambda, --divisor");
    if (!args.a.empty())
        d = hain_class(Signature(parse_int_list(args.a, "--a")));
    else if (!args.delta.empty())
        d = boundary_class(3, subset_from_labels(parse_label_list(args.delta, "--delta"), 3));
    else if (args.lambda)
        d.set_lambda(Rat(1));
    else
        d = divisor_from_json(read_json_file(args.divisor_file));

    DivisorClass result = inverse ? cremona_inverse_pushforward(d) : cremona_pushforward(d);
    if (json)
        emit(out, divisor_to_json(result));
    else
        out << result.str() << "\n";
    return 0;
}

struct SymArgs {
    std::string coords, a, divisor_file;
    bool canonical = false;
    int n = 0;
    bool cone_member = false;
    bool constraints = false;
    long long g = 1;
};

int run_sym(const SymArgs& args, bool json, std::ostream& out) {
    SymDivisorClass d{1, Rat(0), {}};
    int modes = !args.coords.empty();
    modes += !args.a.empty();
    modes += !args.divisor_file.empty();
    modes += args.canonical;
    if (modes != 1)
        fail(errc::bad_input, "choose exactly one of --coords, --a, --canonical, --divisor");
    if (!args.coords.empty()) {
        std::vector<Rat> values;
        std::stringstream ss(args.coords);
        std::string item;
        while (std::getline(ss, item, ',')) values.push_back(rat_parse(item));
        if (values.size() < 2) fail(errc::bad_input, "--coords expects a_irr,b_2,...,b_n");
        Rat a_irr = values.front();
        values.erase(values.begin());
        int n = static_cast<int>(values.size()) + 1;
        if (args.n > 0 && args.n != n)
            fail(errc::bad_input, "--n disagrees with the number of --coords entries");
        d = SymDivisorClass::make(n, std::move(a_irr), std::move(values));
    } else if (args.canonical) {
        if (args.n <= 0) fail(errc::bad_input, "--n is required with --canonical");
        d = symmetrize(canonical_class(args.n));
    } else if (!args.a.empty()) {
        d = symmetrize(hain_class(signature_from_flag(args.a, args.n)));
    } else {
        d = symmetrize(divisor_from_json(read_json_file(args.divisor_file)));
    }

    if (args.constraints) {
        SymConstraintsReport report = nonboundary_constraints_check(d, args.g);
        if (json) {
            emit(out, sym_constraints_to_json(report));
        } else {
            for (const auto& p : report.pairings)
                out << p.curve << " . D = " << rat_pretty(p.value) << (p.nonnegative ? "" : "  < 0")
                    << "\n";
            for (const auto& item : report.chain)
                out << item.constraint << ": " << (item.holds ? "holds" : "fails") << "\n";
            out << "all pairings nonnegative: " << (report.all_nonnegative ? "yes" : "no") << "\n";
            out << "note: " << report.caveat << "\n";
        }
        return 0;
    }
    if (args.cone_member) {
        bool member = in_boundary_cone(d);
        if (json)
            emit(out, Json{{"class", sym_divisor_to_json(d)}, {"boundary_cone_member", member}});
        else
            out << (member ? "true" : "false") << "\n";
        return 0;
    }
    if (json)
        emit(out, sym_divisor_to_json(d));
    else
        out << d.str() << "\n";
    return 0;
}

struct TorsionArgs {
    long long orbits = 0;
    std::string order_count;
    long long sigma = 0;
    bool csv = false;
};

int run_torsion(const TorsionArgs& args, bool json, std::ostream& out) {
    if ((args.orbits > 0) + !args.order_count.empty() + (args.sigma > 0) > 1)
        fail(errc::bad_input, "choose one of --orbits, --order-count, --sigma");
    if (args.sigma > 0) {
        long long value = sigma_fn(args.sigma);
        if (json)
            emit(out, Json{{"t", args.sigma}, {"sigma", value}});
        else
            out << value << "\n";
        return 0;
    }
    if (args.orbits > 0) {
        auto orbits = monodromy_orbits(args.orbits);
        if (json) {
            emit(out, orbits_to_json(orbits));
        } else if (args.csv) {
            out << "k,orbit-size,representative\n";
            for (const auto& o : orbits)
                out << o.invariant << "," << o.size << ",(" << o.representative.first << " "
                    << o.representative.second << ")\n";
        } else {
            out << orbits.size() << " orbit" << (orbits.size() == 1 ? "" : "s") << " on (Z/"
                << args.orbits << ")^2\n";
            for (const auto& o : orbits)
                out << "k = " << o.invariant << ", size " << o.size << ", representative ("
                    << o.representative.first << "," << o.representative.second << ")\n";
        }
        return 0;
    }
    if (!args.order_count.empty()) {
        auto tn = parse_int_list(args.order_count, "--order-count");
        if (tn.size() != 2) fail(errc::bad_input, "--order-count expects t,N");
        long long count = exact_order_count(tn[0], tn[1]);
        if (json)
            emit(out, Json{{"t", tn[0]}, {"N", tn[1]}, {"count", count}});
        else
            out << count << "\n";
        return 0;
    }
    fail(errc::bad_input, "provide --orbits A, --order-count t,N or --sigma T");
}

struct AgeArgs {
    long long k = 0;
    std::string exps;
    std::string profiles_file;
};

int run_age(const AgeArgs& args, bool json, std::ostream& out) {
    if (!args.profiles_file.empty()) {
        Json j = read_json_file(args.profiles_file);
        if (!j.is_array()) fail(errc::bad_input, "--profiles expects a JSON array of {k, exps}");
        std::vector<AgeProfile> profiles;
        for (const auto& item : j) profiles.push_back(age_profile_from_json(item));
        ReidTaiReport report = reid_tai_check(profiles);
        if (json) {
            emit(out, reid_tai_report_to_json(report));
        } else {
            for (const auto& p : report.profiles) {
                out << "k = " << p.profile.k << ": age " << rat_pretty(p.age);
                if (p.quasi_reflection) out << " (quasi-reflection" << (p.ambiguous ? ", ambiguous" : "") << ")";
                out << "\n";
            }
            if (report.min_age)
                out << "min age over non-quasi-reflections: " << rat_pretty(*report.min_age) << "\n";
            else
                out << "all profiles are quasi-reflections\n";
            out << "canonical forms " << (report.extends ? "extend" : "may not extend") << "\n";
        }
        return 0;
    }
    if (args.k < 2 || args.exps.empty()) fail(errc::bad_input, "provide --k and --exps (or --profiles)");
    std::vector<int> exps;
    for (long long v : parse_int_list(args.exps, "--exps")) exps.push_back(static_cast<int>(v));
    AgeProfile p = AgeProfile::make(args.k, std::move(exps));
    if (json) {
        emit(out, Json{{"profile", age_profile_to_json(p)},
                       {"age", rat_str(age(p))},
                       {"quasi_reflection", is_quasi_reflection(p)},
                       {"ambiguous", ambiguous_quasi_reflection(p)}});
    } else {
        out << "age " << rat_pretty(age(p));
        if (is_quasi_reflection(p))
            out << " (quasi-reflection" << (ambiguous_quasi_reflection(p) ? ", ambiguous" : "") << ")";
        out << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::uint64_t seed = kDefaultSeed;
    bool serial = false;
    long long max = 0;
};

int run_verify(const VerifyArgs& args, bool json, std::ostream& out, std::ostream& err) {
    sweeps::AcceptanceOptions options;
    options.seed = args.seed;
    options.exec = args.serial ? sweeps::Exec::serial : sweeps::Exec::parallel;
    options.max_cap = args.max;
    auto results = sweeps::run_acceptance(options);
    if (json) {
        Json j = Json::array();
        for (const auto& r : results)
            j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        emit(out, Json{{"seed", options.seed}, {"criteria", std::move(j)},
                       {"all_passed", sweeps::all_passed(results)}});
    } else {
        sweeps::print_acceptance(results, out);
        out << "seed " << options.seed << (args.max > 0 ? " (reduced bounds; not an acceptance run)" : "")
            << "\n";
    }
    sweeps::print_timings(results, err);
    return sweeps::all_passed(results) ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact divisor-class calculator for moduli of pointed genus-one curves"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output on stdout");

    ClassArgs class_args;
    auto* cmd_class = app.add_subcommand("class", "divisor classes in the (lambda, delta_{0;S}) basis");
    cmd_class->add_option("--a", class_args.a, "signature a1,a2,... for the class of D_a");
    cmd_class->add_option("--n", class_args.n, "point count (pads --a with zeros)");
    cmd_class->add_option("--psi", class_args.psi, "psi class at this marked point");
    cmd_class->add_flag("--canonical", class_args.canonical, "canonical class");
    cmd_class->add_flag("--delta-irr", class_args.delta_irr, "class of the irreducible boundary");
    cmd_class->add_option("--relabel", class_args.relabel_image,
                          "apply the relabeling with this image array");

    FamilyArgs family_args;
    auto* cmd_family = app.add_subcommand("family", "invariants of a one-parameter family");
    cmd_family->add_option("--file", family_args.file, "family data JSON file")->required();
    cmd_family->add_option("--a", family_args.a, "also compute the bundle degree for D_a");
    cmd_family->add_option("--i", family_args.i, "first section label (default 1)");
    cmd_family->add_option("--j", family_args.j, "second section label (default 2)");

    std::string comp_a;
    int comp_n = 0;
    auto* cmd_comp = app.add_subcommand("components", "component count and decomposition of D_a");
    cmd_comp->add_option("--a", comp_a, "signature")->required();
    cmd_comp->add_option("--n", comp_n, "point count (pads --a with zeros)");

    PairArgs pair_args;
    auto* cmd_pair = app.add_subcommand("pair", "intersection pairing of a curve with a divisor");
    cmd_pair->add_option("--curve", pair_args.curve_file, "curve class JSON file");
    cmd_pair->add_option("--divisor", pair_args.divisor_file, "divisor class JSON file");
    cmd_pair->add_option("--x-curve", pair_args.x_curve, "test curve of this 3-point signature");
    cmd_pair->add_option("--a", pair_args.a, "divisor = class of D_a");
    cmd_pair->add_option("--delta", pair_args.delta, "divisor = boundary class of these labels");
    cmd_pair->add_option("--n", pair_args.n, "point count");

    PullbackArgs pull_args;
    auto* cmd_pull = app.add_subcommand("pullback", "pullback along a forgetful map");
    cmd_pull->add_option("--a", pull_args.a, "divisor = class of D_a on the source space");
    cmd_pull->add_option("--divisor", pull_args.divisor_file, "divisor class JSON file");
    cmd_pull->add_option("--n", pull_args.n, "target point count")->required();
    cmd_pull->add_option("--keep", pull_args.keep, "target labels of the kept points (default 1..m)");

    CertifyArgs certify_args;
    auto* cmd_certify = app.add_subcommand("certify", "extremality certificates");
    cmd_certify->add_option("--a", certify_args.a, "3-point signature, or a1,a2 with --pullback");
    cmd_certify->add_flag("--pullback", certify_args.pullback_mode, "certify the pulled-back divisor");
    cmd_certify->add_option("--n", certify_args.n, "target point count for --pullback");
    cmd_certify->add_option("--ray", certify_args.ray, "print the k-th extremal-ray family member");
    cmd_certify->add_option("--divisor", certify_args.divisor_file, "divisor class JSON file");
    cmd_certify->add_option("--curve", certify_args.curve_file, "curve class JSON file");
    cmd_certify->add_option("--irreducible", certify_args.irreducible_cite,
                            "citation for the irreducibility of the divisor");
    cmd_certify->add_option("--moving", certify_args.moving_cite,
                            "citation for the curve moving in the divisor");

    std::string reduce_a;
    auto* cmd_reduce = app.add_subcommand("reduce", "reduce a 3-point signature to (1,1,-2)");
    cmd_reduce->add_option("--a", reduce_a, "primitive signature with nonzero entries")->required();

    FstarArgs fstar_args;
    auto* cmd_fstar = app.add_subcommand("fstar", "pushforward along the degree-addition automorphism");
    cmd_fstar->add_option("--a", fstar_args.a, "divisor = class of D_a");
    cmd_fstar->add_option("--delta", fstar_args.delta, "divisor = boundary class of these labels");
    cmd_fstar->add_flag("--lambda", fstar_args.lambda, "divisor = lambda");
    cmd_fstar->add_option("--divisor", fstar_args.divisor_file, "divisor class JSON file");
    cmd_fstar->add_option("--signature", fstar_args.signature,
                          "apply the induced signature map instead");

    FstarArgs fstar_inv_args;
    auto* cmd_fstar_inv = app.add_subcommand("fstar-inv", "pushforward along the inverse automorphism");
    cmd_fstar_inv->add_option("--a", fstar_inv_args.a, "divisor = class of D_a");
    cmd_fstar_inv->add_option("--delta", fstar_inv_args.delta, "divisor = boundary class of these labels");
    cmd_fstar_inv->add_flag("--lambda", fstar_inv_args.lambda, "divisor = lambda");
    cmd_fstar_inv->add_option("--divisor", fstar_inv_args.divisor_file, "divisor class JSON file");

    SymArgs sym_args;
    auto* cmd_sym = app.add_subcommand("sym", "classes on the unordered-points quotient");
    cmd_sym->add_option("--coords", sym_args.coords, "a_irr,b_2,...,b_n (rationals allowed)");
    cmd_sym->add_option("--a", sym_args.a, "symmetrize the class of D_a");
    cmd_sym->add_flag("--canonical", sym_args.canonical, "symmetrize the canonical class");
    cmd_sym->add_option("--divisor", sym_args.divisor_file, "symmetrize a divisor class JSON file");
    cmd_sym->add_option("--n", sym_args.n, "point count");
    cmd_sym->add_flag("--cone-member", sym_args.cone_member, "test boundary-cone membership");
    cmd_sym->add_flag("--constraints", sym_args.constraints, "moving-curve constraint report");
    cmd_sym->add_option("--g", sym_args.g, "genus for the constraint curves (default 1)");

    TorsionArgs torsion_args;
    auto* cmd_torsion = app.add_subcommand("torsion", "lattice-torus torsion oracle");
    cmd_torsion->add_option("--orbits", torsion_args.orbits, "monodromy orbits on (Z/a)^2");
    cmd_torsion->add_option("--order-count", torsion_args.order_count, "t,N: count points of exact order t");
    cmd_torsion->add_option("--sigma", torsion_args.sigma, "the component-rescaling function at t");
    cmd_torsion->add_flag("--csv", torsion_args.csv, "CSV orbit table");

    AgeArgs age_args;
    auto* cmd_age = app.add_subcommand("age", "Reid-Tai age arithmetic");
    cmd_age->add_option("--k", age_args.k, "automorphism order");
    cmd_age->add_option("--exps", age_args.exps, "eigenvalue exponents k_1,k_2,...");
    cmd_age->add_option("--profiles", age_args.profiles_file, "JSON array of {k, exps} profiles");

    VerifyArgs verify_args;
    auto* cmd_verify = app.add_subcommand("verify", "run the full verification suite");
    cmd_verify->add_option("--seed", verify_args.seed, "seed for the random sweeps");
    cmd_verify->add_flag("--serial", verify_args.serial, "use the serial reference kernels");
    cmd_verify->add_option("--max", verify_args.max, "cap sweep bounds (quick run, not an acceptance run)");

    for (CLI::App* sub : {cmd_class, cmd_family, cmd_comp, cmd_pair, cmd_pull, cmd_certify, cmd_reduce,
                          cmd_fstar, cmd_fstar_inv, cmd_sym, cmd_torsion, cmd_age, cmd_verify})
        sub->fallthrough(); // parent-level --json may follow the subcommand

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_class->parsed()) return run_class(class_args, json, out);
        if (cmd_family->parsed()) return run_family(family_args, json, out);
        if (cmd_comp->parsed()) return run_components(comp_a, comp_n, json, out);
        if (cmd_pair->parsed()) return run_pair(pair_args, json, out);
        if (cmd_pull->parsed()) return run_pullback(pull_args, json, out);
        if (cmd_certify->parsed()) return run_certify(certify_args, json, out);
        if (cmd_reduce->parsed()) return run_reduce(reduce_a, json, out);
        if (cmd_fstar->parsed()) return run_fstar(fstar_args, false, json, out);
        if (cmd_fstar_inv->parsed()) return run_fstar(fstar_inv_args, true, json, out);
        if (cmd_sym->parsed()) return run_sym(sym_args, json, out);
        if (cmd_torsion->parsed()) return run_torsion(torsion_args, json, out);
        if (cmd_age->parsed()) return run_age(age_args, json, out);
        if (cmd_verify->parsed()) return run_verify(verify_args, json, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: no subcommand given\n";
    return 2;
}

} // namespace m1n::cli
