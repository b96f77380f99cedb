#pragma once

// A degree-truncated algebra of unitrivalent diagrams ("Jacobi diagrams")
// with colored legs, modulo antisymmetry (AS) and the three-term edge
// relation (IHX). Diagrams are multigraphs whose internal vertices are
// trivalent and carry a cyclic orientation of their three incident
// half-edges; a free half-edge is a leg labeled by a color. The internal
// degree of a diagram is the number of trivalent vertices; everything of
// internal degree exceeding the cap is silently dropped.
//
// AS is baked into canonical forms: each diagram is stored as a signed
// canonical representative, and a diagram isomorphic to minus itself is
// zero (this also kills self-loops, same-colored leg pairs at a vertex, and
// odd wheels). The quotient by IHX is computed once per (colors, cap) as an
// exact rational row reduction over connected diagrams graded by degree and
// leg colors; the full space is the free symmetric algebra on the connected
// quotient, so an element is a rational combination of multisets of
// connected basis classes. Struts (degree-0 edges) never enter the space;
// they only appear as Gaussian quadratic forms acting on elements.

#include "rational.hpp"

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace diagrams {

using exact::Rat;

// Half-edge h = 3*v + s for vertex v, slot s in {0,1,2}; the slot order is
// the cyclic orientation at v.
struct Graph {
    int n = 0;
    std::vector<int> mate;  // partner half-edge, or -1 for a leg
    std::vector<int> leg;   // leg color, or -1 for an edge end

    int add_vertex() {
        mate.insert(mate.end(), 3, -1);
        leg.insert(leg.end(), 3, -1);
        return n++;
    }
    void connect(int v, int sv, int w, int sw) {
        mate[3 * v + sv] = 3 * w + sw;
        mate[3 * w + sw] = 3 * v + sv;
    }
    void set_leg(int v, int s, int color) { leg[3 * v + s] = color; }
};

// The theta graph: two vertices joined by three edges.
Graph theta();
// Wheel with the given number of spokes: a cycle of vertices, one leg each.
Graph wheel(int spokes, int color);
// The degree-4 "bubble": a four-cycle with two opposite edges doubled.
Graph theta_bubble();
// Theta with one edge subdivided twice; the two new vertices carry legs.
Graph two_leg_theta(int color);
// The complete graph on four vertices.
Graph tetrahedron();

// Canonical form of a (possibly disconnected) diagram: the orientation-
// induced sign and one sorted key per connected component. zero captures
// AS-degenerate diagrams.
struct Canonical {
    bool zero = false;
    int sign = 1;
    std::vector<std::vector<int>> component_keys;  // sorted
};

Canonical canonicalize(const Graph& g);

// Rebuilds the canonical representative encoded by a component key.
Graph graph_from_key(const std::vector<int>& key);

class SpaceBasis;

using Monomial = std::vector<int>;  // sorted connected-basis class ids

// A rational combination of basis monomials; the empty monomial is the unit.
class Element {
  public:
    Element() = default;
    explicit Element(const SpaceBasis* basis) : basis_(basis) {}

    const SpaceBasis* basis() const { return basis_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Monomial& m, const Rat& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Rat& c);
    bool operator==(const Element& o) const { return terms_ == o.terms_; }

  private:
    const SpaceBasis* basis_ = nullptr;
    std::map<Monomial, Rat> terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(Element a, const Rat& c);

// One connected diagram class (nonzero canonical representative).
struct ConnectedClass {
    std::vector<int> key;
    Graph rep;
    int degree = 0;
    std::vector<int> leg_count;  // legs per color
    std::string name;            // short display name
};

// The quotient data for a fixed color count and degree cap.
class SpaceBasis {
  public:
    static SpaceBasis build(int ncolors, int cap);

    int ncolors() const { return ncolors_; }
    int cap() const { return cap_; }

    const std::vector<ConnectedClass>& classes() const { return classes_; }
    const std::vector<int>& basis_class_ids() const { return basis_ids_; }
    bool is_basis_class(int id) const { return is_basis_[id] != 0; }

    // Reduction of a connected class to basis classes; a basis class reduces
    // to itself with coefficient 1.
    const std::vector<std::pair<int, Rat>>& reduction(int id) const { return reductions_[id]; }

    int class_id(const std::vector<int>& key) const;  // -1 if unknown

    int monomial_degree(const Monomial& m) const;
    std::string monomial_name(const Monomial& m) const;

    // Number of basis monomials of each exact degree 0..cap.
    std::vector<long> graded_dimensions() const;

  private:
    int ncolors_ = 0;
    int cap_ = 0;
    std::vector<ConnectedClass> classes_;
    std::map<std::vector<int>, int> id_by_key_;
    std::vector<std::vector<std::pair<int, Rat>>> reductions_;
    std::vector<char> is_basis_;
    std::vector<int> basis_ids_;
};

// The class of g inside the quotient (zero if g is AS-degenerate or its
// degree exceeds the cap).
Element reduce(const Graph& g, const SpaceBasis& b);

// The unit: coefficient 1 on the empty diagram.
Element unit(const SpaceBasis& b);

Element theta_element(const SpaceBasis& b);
Element theta_bubble_element(const SpaceBasis& b);
Element wheel_element(const SpaceBasis& b, int spokes, int color);
Element two_leg_theta_element(const SpaceBasis& b, int color);
Element tetrahedron_element(const SpaceBasis& b);

// For z = c * e + ... with e the (+-1)-signed single-monomial element,
// returns c; e must have exactly one term.
Rat coefficient_of(const Element& z, const Element& e);

Element product(const Element& x, const Element& y);

// exp(x) truncated; x must have zero coefficient on the empty diagram.
Element exp_element(const Element& x);

// 1/x truncated; x must have nonzero coefficient on the empty diagram.
Element inverse_element(const Element& x);

// Sum over all ways of gluing every leg of x whose color lies in `colors`
// to a like-colored leg of y, bijectively; monomial pairs with mismatched
// leg counts in a shared color contribute nothing.
Element pair_elements(const Element& x, const Element& y, const std::set<int>& colors);

// A symmetric quadratic form on colors: the exponent of a strut Gaussian.
struct QuadraticForm {
    std::map<std::pair<int, int>, Rat> coef;

    void add(int a, int b, const Rat& c) {
        auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
        coef[key] += c;
        if (coef[key] == 0) coef.erase(key);
    }
    Rat get(int a, int b) const {
        auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
        auto it = coef.find(key);
        return it == coef.end() ? Rat(0) : it->second;
    }
};

// Contraction with exp(q): the sum over partial matchings of y's legs where
// a matched (a,b) pair of distinct colors weighs q(a,b) and a same-colored
// pair weighs 2 q(a,a); unmatched legs persist.
Element apply_gaussian(const QuadraticForm& q, const Element& y);

// Recolors every `from` leg to `to`, scaling each monomial by
// factor^(number of from-legs).
Element relabel_scale(const Element& y, int from, int to, const Rat& factor);

// Coefficients b_2, b_4, ..., b_{2m}, ... of (1/2) log (sinh(x/2)/(x/2));
// returns the values for 2m = 2, 4, ..., up to max_degree.
std::vector<Rat> modified_bernoulli(int max_degree);

// Omega = exp(sum_m b_{2m} wheel_{2m}) in the given color, truncated.
Element omega_big(const SpaceBasis& b, int color);

// omega = <Omega, Omega> (a closed element; any color works, 0 is used).
Element omega_small(const SpaceBasis& b);

Element omega_small_inverse(const SpaceBasis& b);

}  // namespace diagrams
