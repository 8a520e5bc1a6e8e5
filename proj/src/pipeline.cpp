#include "beadweave/pipeline.hpp"
#include "beadweave/errors.hpp"
#include "beadweave/sl2weight.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

namespace beadweave {

namespace {

// Runs one stage, prefixing any escaping error with the stage name.
template <typename F>
auto stage(const char* name, F&& body) {
    try {
        return body();
    } catch (const StructuralError& err) {
        throw StructuralError(std::string("stage ") + name + ": " + err.what());
    } catch (const PreconditionError& err) {
        throw PreconditionError(std::string("stage ") + name + ": " + err.what());
    }
}

} // namespace

VerifyReport verify_chain(int n, int max_n) {
    if (n < 1)
        throw PreconditionError("grope class 2n requires n >= 1");
    if (n > max_n)
        throw PreconditionError("n exceeds the configured maximum " + std::to_string(max_n));

    VerifyReport r;
    r.n = n;

    auto [clasper, lk] = stage("clasper", [&] {
        GropeSpec spec;
        spec.n = n;
        return build_grope_clasper(spec);
    });
    r.clasper_trivalent = clasper.diagram.trivalent;
    r.clasper_leaves = clasper.leaf_count();

    DiagramSum contracted =
        stage("contraction", [&] { return complete_contraction(clasper, lk); });
    r.contraction_terms = contracted.size();
    r.contraction_shape = check_contraction_shape(contracted, n);

    DiagramSum haired = stage("hair", [&] { return hair_expand(contracted, n + 1); });
    std::set<int> degrees;
    for (const auto& [enc, term] : haired.terms())
        degrees.insert(vassiliev_degree(term.representative));
    r.surviving_degrees.assign(degrees.begin(), degrees.end());
    r.low_degrees_empty = true;
    for (int deg : degrees)
        if (deg <= n) r.low_degrees_empty = false;

    DiagramSum leading =
        stage("leading-term", [&] { return leading_term(haired, n, &r.a2h); });
    r.leading_terms = leading.size();
    r.coeffs_half_integral = true;
    for (const auto& [enc, term] : leading.terms()) {
        if (denominator(Rational(term.coeff * 2)) != 1) r.coeffs_half_integral = false;
    }

    stage("sl2", [&] {
        Sl2Cache cache;
        Diagram joined_generator = join_hairs(grope_generator(n));
        r.sl2_value = sl2_eval(joined_generator, cache);
        r.sl2_expected = Int(3) << n;
        r.sl2_ok = r.sl2_value == r.sl2_expected || r.sl2_value == -r.sl2_expected;

        DiagramSum joined_leading;
        for (const auto& [enc, term] : leading.terms())
            joined_leading.add(join_hairs(term.representative), term.coeff);
        r.sl2_joined_leading = sl2_eval_sum(joined_leading, cache);
        Rational half_expected = Rational(r.sl2_expected, 2);
        r.joined_leading_ok = r.sl2_joined_leading == half_expected ||
                              r.sl2_joined_leading == -half_expected;
        return 0;
    });

    r.pass = r.contraction_shape.pass && !r.contraction_shape.vacuous && r.contraction_terms > 0 &&
             r.low_degrees_empty && r.a2h.pass && r.leading_terms > 0 &&
             r.coeffs_half_integral && r.sl2_ok && r.joined_leading_ok;
    return r;
}

namespace {

const char* verdict(bool ok) {
    return ok ? "pass" : "FAIL";
}

} // namespace

std::string verify_report_text(const VerifyReport& r) {
    std::ostringstream out;
    out << "verify n=" << r.n << " (grope class " << 2 * r.n << ")\n";
    out << "  clasper: " << r.clasper_trivalent << " trivalent vertices, " << r.clasper_leaves
        << " leaves\n";
    out << "  [" << verdict(r.contraction_shape.pass && !r.contraction_shape.vacuous && r.contraction_terms > 0)
        << "] contraction shape: " << r.contraction_terms
        << " term(s), connected, Euler degree " << 2 * r.n - 2
        << ", one +-(t-1) bead\n";
    for (const auto& v : r.contraction_shape.violations) out << "        " << v << "\n";
    out << "  [" << verdict(r.low_degrees_empty) << "] hair map: Vassiliev degrees <= " << r.n
        << " are empty (surviving:";
    for (int deg : r.surviving_degrees) out << " " << deg;
    out << ")\n";
    out << "  [" << verdict(r.a2h.pass && r.leading_terms > 0 && r.coeffs_half_integral)
        << "] leading term: " << r.leading_terms << " term(s) in degree " << r.n + 1
        << ", two hairs on a single edge, coefficients in (1/2)Z\n";
    for (const auto& v : r.a2h.violations) out << "        " << v << "\n";
    out << "  [" << verdict(r.sl2_ok) << "] sl2 certificate: joined generator evaluates to "
        << r.sl2_value << " (expected +-" << r.sl2_expected << ")\n";
    out << "  [" << verdict(r.joined_leading_ok)
        << "] sl2 of joined leading term: " << r.sl2_joined_leading << " (expected +-"
        << Rational(r.sl2_expected, 2) << ")\n";
    out << (r.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string verify_report_json(const VerifyReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["pass"] = r.pass;
    j["clasper"] = {{"trivalent", r.clasper_trivalent}, {"leaves", r.clasper_leaves}};

    nlohmann::json t1;
    t1["pass"] = r.contraction_shape.pass && !r.contraction_shape.vacuous && r.contraction_terms > 0;
    t1["terms"] = r.contraction_terms;
    t1["violations"] = r.contraction_shape.violations;
    j["contraction_shape"] = t1;

    nlohmann::json hm;
    hm["pass"] = r.low_degrees_empty;
    hm["surviving_degrees"] = r.surviving_degrees;
    j["hair_vanishing"] = hm;

    nlohmann::json lt;
    lt["pass"] = r.a2h.pass && r.leading_terms > 0 && r.coeffs_half_integral;
    lt["terms"] = r.leading_terms;
    lt["coeffs_half_integral"] = r.coeffs_half_integral;
    lt["violations"] = r.a2h.violations;
    j["leading_term"] = lt;

    nlohmann::json w;
    w["pass"] = r.sl2_ok;
    w["value"] = r.sl2_value.str();
    w["expected_magnitude"] = r.sl2_expected.str();
    w["joined_leading_value"] = [&] {
        std::ostringstream os;
        os << r.sl2_joined_leading;
        return os.str();
    }();
    w["joined_leading_pass"] = r.joined_leading_ok;
    j["sl2_certificate"] = w;
    return j.dump(2) + "\n";
}

} // namespace beadweave
