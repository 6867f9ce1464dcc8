#include "h3avg/classify.hpp"

namespace h3avg {

const char* to_string(NilpotentClass c) {
    switch (c) {
        case NilpotentClass::TwoGroup: return "2-group";
        case NilpotentClass::ThreeGroupWith3Cycle: return "3-group with 3-cycle";
        case NilpotentClass::C3timesH2: return "C3 x H2";
        case NilpotentClass::C2timesH3: return "C2 x H3";
        case NilpotentClass::ThreeGroupTwo3Cycles: return "3-group with two 3-cycles";
        case NilpotentClass::FiveGroupWith5Cycle: return "5-group with 5-cycle";
        case NilpotentClass::C5timesH2: return "C5 x H2";
        case NilpotentClass::BeyondTable: return "beyond table (a >= 6)";
    }
    return "?";
}

const char* to_string(CoverageRoute r) {
    switch (r) {
        case CoverageRoute::OWW2Group: return "oww_2group";
        case CoverageRoute::OWWRemark3Group: return "oww_remark_3group";
        case CoverageRoute::Theorem12: return "theorem_1_2";
        case CoverageRoute::UncoveredFrontier: return "uncovered_frontier";
    }
    return "?";
}

namespace {

bool is_p_group(long long order, int p) {
    while (order % p == 0) order /= p;
    return order == 1;
}

bool factor_has_cycle(const PermGroup& G, int len, Perm* out) {
    for (const auto& g : G.elements())
        if (g.is_product_of_cycles(len, 1)) {
            if (out) *out = g;
            return true;
        }
    return false;
}

} // namespace

ClassificationResult classify_nilpotent(const PermGroup& H) {
    if (H.order() <= 1)
        throw std::invalid_argument("classify_nilpotent: group is trivial");
    if (!H.is_transitive() || !is_nilpotent(H))
        throw std::invalid_argument("classify_nilpotent: group not transitive nilpotent");

    ClassificationResult res;
    res.witness = homogeneous_p_cycle_witness(H);
    res.a_value = res.witness.m * (res.witness.p - 1);

    long long order = H.order();
    if (is_p_group(order, 2)) {
        // a(H) equals the least m with a product of m transpositions present
        if (res.witness.p != 2)
            throw InternalCheckError("classify_nilpotent: 2-group witness not an involution");
        res.tag = NilpotentClass::TwoGroup;
        return res;
    }

    int a = res.a_value;
    if (a < 2)
        throw InternalCheckError("classify_nilpotent: non-2-group with a(H) < 2");

    SylowDecomposition dec;
    auto need_dec = [&]() -> SylowDecomposition& {
        if (dec.factors.empty()) dec = sylow_decompose(H);
        return dec;
    };

    auto verify_cyclic_factor = [&](int p) {
        const SylowFactor* f = need_dec().factor_for(p);
        if (!f || f->group.order() != p || f->group.degree() != p)
            throw InternalCheckError("classify_nilpotent: expected cyclic Sylow factor");
    };
    auto verify_factor_cycle = [&](int p, int len, ClassificationResult& r) {
        const SylowFactor* f = need_dec().factor_for(p);
        Perm w;
        if (!f || !is_p_group(f->group.order(), p) || !factor_has_cycle(f->group, len, &w))
            throw InternalCheckError("classify_nilpotent: Sylow factor lacks required cycle");
        r.factor_witness = w;
        r.factor_witness_p = p;
    };

    switch (a) {
        case 2:
            if (!is_p_group(order, 3) || !(res.witness.p == 3 && res.witness.m == 1))
                throw InternalCheckError("classify_nilpotent: a=2 case is not a 3-group with 3-cycle");
            res.tag = NilpotentClass::ThreeGroupWith3Cycle;
            break;
        case 3:
            res.tag = NilpotentClass::C3timesH2;
            verify_cyclic_factor(3);
            verify_factor_cycle(2, 2, res);
            break;
        case 4:
            if (is_p_group(order, 3)) {
                if (!(res.witness.p == 3 && res.witness.m == 2))
                    throw InternalCheckError("classify_nilpotent: a=4 3-group witness shape");
                res.tag = NilpotentClass::ThreeGroupTwo3Cycles;
            } else if (is_p_group(order, 5)) {
                if (!(res.witness.p == 5 && res.witness.m == 1))
                    throw InternalCheckError("classify_nilpotent: a=4 5-group witness shape");
                res.tag = NilpotentClass::FiveGroupWith5Cycle;
            } else {
                res.tag = NilpotentClass::C2timesH3;
                verify_cyclic_factor(2);
                verify_factor_cycle(3, 3, res);
            }
            break;
        case 5:
            res.tag = NilpotentClass::C5timesH2;
            verify_cyclic_factor(5);
            verify_factor_cycle(2, 2, res);
            break;
        default:
            res.tag = NilpotentClass::BeyondTable;
            break;
    }
    return res;
}

CoverageVerdict coverage_verdict(const PermGroup& H) {
    if (H.order() <= 1)
        throw std::invalid_argument("coverage_verdict: group is trivial");
    if (!H.is_transitive())
        throw std::invalid_argument("coverage_verdict: group not transitive");

    CoverageVerdict v;
    v.a_value = a_invariant(H).value;
    v.nilpotent = is_nilpotent(H);

    if (!v.nilpotent) {
        v.route = CoverageRoute::UncoveredFrontier;
        if (H.degree() == 3 && H.order() == 6)
            v.note = "smallest group for which the result is open (S3, degree 3)";
        else if (H.degree() == 5 && H.order() == 10)
            v.note = "smallest open case with order coprime to 3 (D5, degree 5)";
        return v;
    }

    ClassificationResult cls = classify_nilpotent(H);
    if (cls.tag == NilpotentClass::TwoGroup) {
        v.route = CoverageRoute::OWW2Group;
        return v;
    }
    if (v.a_value == 2) {
        v.route = CoverageRoute::OWWRemark3Group;
        return v;
    }
    v.route = CoverageRoute::Theorem12;
    switch (cls.tag) {
        case NilpotentClass::FiveGroupWith5Cycle: v.new_form = "H5"; break;
        case NilpotentClass::C2timesH3: v.new_form = "C2xH3"; break;
        case NilpotentClass::C3timesH2: v.new_form = "C3xH2"; break;
        case NilpotentClass::C5timesH2: v.new_form = "C5xH2"; break;
        default: break;
    }
    v.new_in_this_paper = !v.new_form.empty();
    return v;
}

} // namespace h3avg
