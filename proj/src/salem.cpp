#include "zzpa/salem.hpp"

#include <utility>
#include <vector>

#include "zzpa/classify.hpp"
#include "zzpa/error.hpp"

namespace zzpa {

namespace {

void require_genus(int g) {
    if (g < 1) throw input_error("genus must be at least 1");
}

// Roots inside the open critical interval (-2, 2), ascending.
std::vector<AlgebraicReal> critical_interval_roots(const IntPoly& p) {
    std::vector<AlgebraicReal> out;
    for (AlgebraicReal& r : isolate_real_roots(p)) {
        if (r.compare(Rat(-2)) > 0 && r.compare(Rat(2)) < 0) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace

IntPoly family_digit_poly(int g) {
    require_genus(g);
    std::vector<Int> c(2 * g + 2, 0);
    c[0] = 1;
    c[1] = -2;
    c[2 * g] = -2;
    c[2 * g + 1] = 1;
    IntPoly D{std::move(c)};
    if (D != digit_poly_from_fraction(2, FractionLabel(1, 2 * g))) {
        throw verification_error(
            "family digit polynomial disagrees with the fraction pipeline");
    }
    return D;
}

IntPoly d_poly(int g) {
    require_genus(g);
    auto [quot, rem] = divmod(family_digit_poly(g), IntPoly({1, 1}));
    if (!rem.is_zero()) {
        throw verification_error("digit polynomial is not divisible by t+1");
    }
    std::vector<Int> c(2 * g + 1, 0);
    c[0] = 1;
    c[2 * g] = 1;
    for (int i = 1; i < 2 * g; ++i) c[i] = (i % 2 == 0) ? 3 : -3;
    if (quot != IntPoly{std::move(c)}) {
        throw verification_error(
            "Salem factor disagrees with the alternating closed form");
    }
    return quot;
}

IntPoly companion_q(int g) {
    require_genus(g);
    return companion_polynomial(d_poly(g));
}

bool check_recurrence(int g) {
    if (g < 2) throw input_error("recurrence check needs g >= 2");
    IntPoly w = IntPoly::monomial(1);
    return companion_q(g + 2) == w * companion_q(g + 1) - companion_q(g);
}

bool interlacing_check(int g) {
    if (g < 2) throw input_error("interlacing check needs g >= 2");
    std::vector<AlgebraicReal> a = critical_interval_roots(companion_q(g));
    std::vector<AlgebraicReal> b = critical_interval_roots(companion_q(g + 1));
    if (static_cast<int>(a.size()) != g - 1 ||
        static_cast<int>(b.size()) != g) {
        return false;
    }
    for (int i = 0; i + 1 < static_cast<int>(b.size()); ++i) {
        if (!(b[i].compare(a[i]) < 0 && a[i].compare(b[i + 1]) < 0)) {
            return false;
        }
    }
    return true;
}

SalemReport salem_report(int g) {
    require_genus(g);
    IntPoly D = family_digit_poly(g);
    IntPoly d = d_poly(g);
    IntPoly q = companion_q(g);

    bool cross_check = D == digit_poly_from_fraction(2, FractionLabel(1, 2 * g));
    bool reciprocal = is_reciprocal(d);
    bool recurrence_ok = true;
    if (g >= 3) {
        IntPoly w = IntPoly::monomial(1);
        recurrence_ok = q == w * companion_q(g - 1) - companion_q(g - 2);
    }
    Int q_at_2 = q.eval(Int(2));
    Int q_at_m2 = q.eval(Int(-2));
    bool sign_ok = (g % 2 == 0) ? q_at_m2 > 0 : q_at_m2 < 0;

    std::vector<AlgebraicReal> qroots = isolate_real_roots(q);
    int in_critical = 0;
    int above_two = 0;
    for (const AlgebraicReal& r : qroots) {
        if (r.compare(Rat(-2)) > 0 && r.compare(Rat(2)) < 0) ++in_critical;
        if (r.compare(Rat(2)) > 0) ++above_two;
    }
    bool totally_real = static_cast<int>(qroots.size()) == g &&
                        in_critical + above_two == g;
    bool interlaces = g < 3 || interlacing_check(g - 1);
    bool cyc_free = !cyclotomic_factor_witness(d).has_value();

    AlgebraicReal lambda = perron_root(d);
    std::vector<AlgebraicReal> droots = isolate_real_roots(d);
    bool d_roots_ok = droots.size() == 2 && droots[0].compare(Rat(0)) > 0 &&
                      droots[0].compare(Rat(1)) < 0 &&
                      droots[1].compare(Rat(1)) > 0;

    BuiltMap built = build_zigzag(2, FractionLabel(1, 2 * g));
    PAVerdict verdict = is_pA_type(built.map);
    SingularityReport sing = singularity_report(built.map, built.orbit);
    bool geometry_ok = verdict.is_pa &&
                       built.map.context()->minpoly() == d &&
                       sing.one_prongs == 2 * g + 2 &&
                       sing.punctures == 2 * g + 2 &&
                       sing.marked_points == 2 * g + 3 &&
                       sing.double_cover_genus.has_value() &&
                       *sing.double_cover_genus == g &&
                       sing.trace_field_degree == g;

    bool is_salem = cross_check && reciprocal && recurrence_ok &&
                    q_at_2 == -1 && sign_ok && in_critical == g - 1 &&
                    above_two == 1 && totally_real && interlaces &&
                    cyc_free && d_roots_ok && geometry_ok;

    return SalemReport{g,
                       std::move(D),
                       std::move(d),
                       std::move(q),
                       cross_check,
                       reciprocal,
                       recurrence_ok,
                       std::move(q_at_2),
                       sign_ok,
                       in_critical,
                       above_two,
                       totally_real,
                       interlaces,
                       cyc_free,
                       2 * in_critical,
                       std::move(lambda),
                       d_roots_ok,
                       g == 1,
                       geometry_ok,
                       std::move(sing),
                       is_salem};
}

}  // namespace zzpa
