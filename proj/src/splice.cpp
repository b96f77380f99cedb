#include "splice.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <utility>

#include <boost/integer/extended_euclidean.hpp>

#include "dedekind.hpp"

namespace splice {

using diagrams::Element;

FramingFraction::FramingFraction(Int u_, Int v_) : u(std::move(u_)), v(std::move(v_)) {
    if (v == 0) throw exact::ValidationError("FramingFraction: zero denominator");
    if (v < 0) {
        u = -u;
        v = -v;
    }
    Int g = exact::gcd(u, v);
    if (g > 1) {
        u /= g;
        v /= g;
    }
}

GluingMatrix::GluingMatrix(Int p_, Int q_, Int r_, Int s_)
    : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)), s(std::move(s_)) {
    if (p * s - q * r != 1)
        throw exact::ValidationError("GluingMatrix: ps - qr must equal 1");
}

const diagrams::SpaceBasis& shared_basis(int ncolors, int cap) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<diagrams::SpaceBasis>> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(ncolors, cap);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto built = std::make_unique<diagrams::SpaceBasis>(diagrams::SpaceBasis::build(ncolors, cap));
        it = cache.emplace(key, std::move(built)).first;
    }
    return *it->second;
}

namespace {

Int lambda_int(const GluingMatrix& g, const FramingFraction& f1, const FramingFraction& f2) {
    return g.q * f1.u * f2.u + g.r * f1.v * f2.v + g.s * f2.u * f1.v + g.p * f2.v * f1.u;
}

void require_record_domain(const GluingMatrix& g, const KnotRecord& k1, const KnotRecord& k2,
                           const char* who) {
    if (!k1.framing.is_null() || !k2.framing.is_null())
        throw exact::ValidationError(std::string(who) +
                                     ": records must carry the preferred parallel (framing 0/1)");
    if (g.r == 0)
        throw exact::NotQHSError(std::string(who) +
                                 ": r = 0 does not give a rational homology sphere");
}

// (p, q) with p*s - q*r = 1, for coprime r, s (s may be zero only if r = +-1).
std::pair<Int, Int> surgery_pair(const Int& r, const Int& s) {
    if (s == 0) return {Int(0), -r};  // r = +-1 here, and -(-r)*r = r^2 = 1
    Int ra = abs(r), sa = abs(s);
    auto e = boost::integer::extended_euclidean(sa, ra);  // x*|s| + y*|r| = 1
    Int p = s < 0 ? Int(-e.x) : e.x;
    Int q = r < 0 ? e.y : Int(-e.y);
    return {p, q};
}

}  // namespace

std::pair<bool, Rat> is_qhs(const GluingMatrix& g, const FramingFraction& f1,
                            const FramingFraction& f2) {
    Int lam = lambda_int(g, f1, f2);
    return {lam != 0, Rat(lam)};
}

HopfChain hopf_chain(const GluingMatrix& g) {
    HopfChain out;
    out.chain = sl2z::splice_factorization(g.mat());
    out.parity = static_cast<int>(out.chain.size() % 2);
    return out;
}

tridiag::Tridiagonal linking_matrix(const GluingMatrix& g, const FramingFraction& f1,
                                    const FramingFraction& f2) {
    tridiag::Tridiagonal diag;
    diag.push_back(f1.value());
    for (const Int& a : hopf_chain(g).chain) diag.push_back(Rat(a));
    diag.push_back(f2.value());
    return diag;
}

Rat kappa(const GluingMatrix& g, const FramingFraction& f1, const FramingFraction& f2) {
    Int lam = lambda_int(g, f1, f2);
    if (lam == 0)
        throw exact::NotQHSError("kappa: the splice is not a rational homology sphere");
    Int tau1 = g.q * f1.u + g.s * f1.v;
    Int tau2 = g.q * f2.u + g.p * f2.v;
    Rat fr = f1.value() + f2.value();

    Rat route1, route2;
    if (g.q != 0) {
        Rat base = dedekind::dedekind_symbol_fast(exact::make_rat(g.s, g.q)) - exact::make_rat(Int(g.s + g.p), g.q) - fr;
        route1 = base + 3 * (exact::sgn(Int(g.q * tau1)) + exact::sgn(Int(lam * tau1)));
        route2 = base + 3 * (exact::sgn(Int(g.q * tau2)) + exact::sgn(Int(lam * tau2)));
    } else {
        route1 = Rat(g.s) * (3 * exact::sgn(lam) - g.r) - fr;
        route2 = Rat(g.p) * (3 * exact::sgn(lam) - g.r) - fr;
    }

    tridiag::Tridiagonal diag = linking_matrix(g, f1, f2);
    Rat tr(0);
    for (const Rat& c : diag) tr += c;
    Rat route3 = 3 * tridiag::signature_recursive(diag) - tr;

    if (route1 != route2 || route2 != route3)
        throw exact::ConsistencyError("kappa: the three evaluation routes disagree");
    return route1;
}

Rat casson_walker(const GluingMatrix& g, const KnotRecord& k1, const KnotRecord& k2) {
    require_record_domain(g, k1, k2, "casson_walker");
    Rat pr = exact::make_rat(g.p, g.r), sr = exact::make_rat(g.s, g.r);
    return k1.ambient_lambda_w + k2.ambient_lambda_w -
           dedekind::dedekind_symbol_fast(pr) / 12 + pr * (2 * k1.a2) + sr * (2 * k2.a2);
}

Rat lambda2_splice(const GluingMatrix& g, const KnotRecord& k1, const KnotRecord& k2) {
    require_record_domain(g, k1, k2, "lambda2_splice");
    Rat d1 = 2 * k1.a2, d2 = 2 * k2.a2;                         // second derivatives
    Rat e1 = 24 * (k1.a2 + k1.a4), e2 = 24 * (k2.a2 + k2.a4);   // fourth derivatives
    Rat inv_r2(1, g.r * g.r);
    Rat p2r2(g.p * g.p, g.r * g.r), s2r2(g.s * g.s, g.r * g.r);
    Rat pr = exact::make_rat(g.p, g.r), sr = exact::make_rat(g.s, g.r);
    return k1.ambient_lambda2 + k2.ambient_lambda2 + Rat(1, 1152) * (inv_r2 - 1) +
           Rat(1, 96) * (1 - inv_r2) * (d1 + d2) + Rat(9, 16) * p2r2 * d1 +
           Rat(9, 16) * s2r2 * d2 + Rat(7, 32) * p2r2 * d1 * d1 +
           Rat(7, 32) * s2r2 * d2 * d2 + inv_r2 / 8 * d1 * d2 - Rat(5, 96) * p2r2 * e1 -
           Rat(5, 96) * s2r2 * e2 - pr * k1.v_coeff - sr * k2.v_coeff;
}

diagrams::Element wheeled_invariant(const KnotRecord& k, const diagrams::SpaceBasis& b,
                                    int color) {
    if (!k.framing.is_null())
        throw exact::ValidationError(
            "wheeled_invariant: framing must be the preferred parallel (0/1)");
    if (color < 0 || color >= b.ncolors())
        throw exact::ValidationError("wheeled_invariant: color outside the space");
    if (b.cap() < 4)
        throw exact::ValidationError("wheeled_invariant: degree cap must be at least 4");

    auto bern = diagrams::modified_bernoulli(4);
    const Rat& b2 = bern[0];
    const Rat& b4 = bern[1];
    const Rat& lw = k.ambient_lambda_w;
    Rat c2 = b2 - k.a2 / 2;
    Rat c4 = b4 - k.a2 / 24 + k.a2 * k.a2 / 4 - k.a4 / 2;

    Element th = diagrams::theta_element(b);
    Element w2 = diagrams::wheel_element(b, 2, color);
    return diagrams::unit(b) + th * (lw / 4) +
           diagrams::theta_bubble_element(b) * (k.a2 * b2 - 2 * b2 * b2 + k.ambient_lambda2) +
           diagrams::product(th, th) * (lw * lw / 32) +
           diagrams::product(th, w2) * (lw / 4 * c2) +
           diagrams::product(w2, w2) * (c2 * c2 / 2) + w2 * c2 +
           diagrams::two_leg_theta_element(b, color) * k.v_coeff +
           diagrams::wheel_element(b, 4, color) * c4;
}

FramedElement unwheel_frame(const diagrams::Element& e, const Rat& phi, int color) {
    const diagrams::SpaceBasis* b = e.basis();
    if (b == nullptr) throw exact::ValidationError("unwheel_frame: element has no space");
    FramedElement out;
    out.element =
        diagrams::product(e, diagrams::exp_element(diagrams::theta_element(*b) * (phi / 48)));
    out.form.add(color, color, -phi / 2);
    return out;
}

std::pair<Rat, Rat> extract_invariants(const diagrams::Element& z) {
    const diagrams::SpaceBasis* b = z.basis();
    if (b == nullptr || b->cap() < 4)
        throw exact::ConsistencyError("extract_invariants: need a space of cap >= 4");
    for (const auto& [mono, coef] : z.terms())
        for (int id : mono)
            for (int legs : b->classes()[id].leg_count)
                if (legs != 0)
                    throw exact::ConsistencyError("extract_invariants: element is not closed");
    if (z.coefficient({}) != 1)
        throw exact::ConsistencyError(
            "extract_invariants: empty-diagram coefficient must be 1");

    Element th = diagrams::theta_element(*b);
    Rat lw = 4 * diagrams::coefficient_of(z, th);
    Rat l2 = diagrams::coefficient_of(z, diagrams::theta_bubble_element(*b));
    if (diagrams::coefficient_of(z, diagrams::product(th, th)) != lw * lw / 32)
        throw exact::ConsistencyError("extract_invariants: theta^2 coefficient is off square");
    return {lw, l2};
}

SpliceResult splice_lmo_truncated(const GluingMatrix& g, const KnotRecord& k1,
                                  const KnotRecord& k2, int cap) {
    require_record_domain(g, k1, k2, "splice_lmo_truncated");
    if (cap < 4 || cap > 5)
        throw exact::ValidationError("splice_lmo_truncated: cap must be 4 or 5");

    const diagrams::SpaceBasis& b = shared_basis(2, cap);
    Element z1 = wheeled_invariant(k1, b, kColor1);
    Element z2 = wheeled_invariant(k2, b, kColor2);

    diagrams::QuadraticForm d1;
    d1.add(kColor1, kColor1, exact::make_rat(Int(-g.p), Int(2 * g.r)));
    z1 = diagrams::apply_gaussian(d1, z1);
    z1 = diagrams::relabel_scale(z1, kColor1, kColor2, exact::make_rat(Int(-1), g.r));

    diagrams::QuadraticForm d2;
    d2.add(kColor2, kColor2, exact::make_rat(Int(-g.s), Int(2 * g.r)));
    z2 = diagrams::apply_gaussian(d2, z2);

    Element h = diagrams::pair_elements(z1, z2, {kColor2});
    Rat expo = (exact::make_rat(Int(g.p + g.s), g.r) - dedekind::dedekind_symbol_fast(exact::make_rat(g.p, g.r))) / 48;
    Element total = diagrams::product(
        diagrams::omega_small(b),
        diagrams::product(diagrams::exp_element(diagrams::theta_element(b) * expo), h));

    SpliceResult out;
    std::tie(out.lambda_w, out.lambda2) = extract_invariants(total);
    out.raw = std::move(total);
    return out;
}

diagrams::Element splice_lmo_general(const GluingMatrix& g, const FramingFraction& f1,
                                     const FramingFraction& f2,
                                     const diagrams::Element& z1bar,
                                     const diagrams::Element& z2bar, int cap) {
    const diagrams::SpaceBasis* b = z1bar.basis();
    if (b == nullptr || z2bar.basis() != b)
        throw exact::ValidationError("splice_lmo_general: elements must share one space");
    if (b->ncolors() < 2 || b->cap() != cap)
        throw exact::ValidationError("splice_lmo_general: space does not fit the cap");
    Int lam = lambda_int(g, f1, f2);
    if (lam == 0)
        throw exact::NotQHSError("splice_lmo_general: the splice is not a rational homology sphere");
    Int tau1 = g.q * f1.u + g.s * f1.v;
    Int tau2 = g.q * f2.u + g.p * f2.v;

    diagrams::QuadraticForm d1;
    d1.add(kColor1, kColor1, exact::make_rat(Int(-(f1.v * tau2)), Int(2 * lam)));
    Element z1 = diagrams::apply_gaussian(d1, z1bar);
    z1 = diagrams::relabel_scale(z1, kColor1, kColor2, exact::make_rat(Int(-(f1.v * f2.v)), lam));

    diagrams::QuadraticForm d2;
    d2.add(kColor2, kColor2, exact::make_rat(Int(-(f2.v * tau1)), Int(2 * lam)));
    Element z2 = diagrams::apply_gaussian(d2, z2bar);

    Element h = diagrams::pair_elements(z1, z2, {kColor2});
    Rat kap = kappa(g, f1, f2);
    return diagrams::product(
        diagrams::omega_small(*b),
        diagrams::product(diagrams::exp_element(diagrams::theta_element(*b) * (kap / 48)), h));
}

SpliceResult rational_surgery(const KnotRecord& k, const Int& r, const Int& s) {
    if (!k.framing.is_null())
        throw exact::ValidationError("rational_surgery: record must carry framing 0/1");
    if (r == 0) throw exact::NotQHSError("rational_surgery: r must be nonzero");
    if (s == 0) throw exact::ValidationError("rational_surgery: s must be nonzero");
    if (exact::gcd(r, s) != 1)
        throw exact::ValidationError("rational_surgery: r and s must be coprime");

    auto [p, q] = surgery_pair(r, s);
    SpliceResult first = splice_lmo_truncated(GluingMatrix(p, q, r, s), KnotRecord{}, k);
    SpliceResult second =
        splice_lmo_truncated(GluingMatrix(p + r, q + s, r, s), KnotRecord{}, k);
    if (first.lambda_w != second.lambda_w || first.lambda2 != second.lambda2 ||
        !(*first.raw == *second.raw))
        throw exact::ConsistencyError(
            "rational_surgery: result depends on the auxiliary (p, q) choice");
    return first;
}

SpliceResult lens(const Int& r, const Int& s) {
    if (r == 0) throw exact::NotQHSError("lens: r must be nonzero");
    if (exact::gcd(r, s) != 1) throw exact::ValidationError("lens: r and s must be coprime");

    auto [p, q] = surgery_pair(r, s);
    SpliceResult got =
        splice_lmo_truncated(GluingMatrix(p, q, r, s), KnotRecord{}, KnotRecord{});
    Rat lw = -dedekind::dedekind_symbol_fast(exact::make_rat(s, r)) / 12;
    Rat l2 = Rat(1, 1152) * (Rat(1, r * r) - 1);
    if (got.lambda_w != lw || got.lambda2 != l2)
        throw exact::ConsistencyError("lens: engine value disagrees with the closed forms");
    return got;
}

}  // namespace splice
