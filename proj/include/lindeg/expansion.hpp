#pragma once

// Expansion of the monomial
//   M = E_1^{(n)} E_2^{(n-1)} ... E_n^{(1)} E_1^{(1)} E_2^{(2)} ... E_n^{(n)}
// first in the PBW basis attached to i_- = (1,2,1,3,2,1,...) and then in the
// canonical basis. Everything lives in coordinates indexed by the parameter
// set P = { y : 0 <= y_k <= min(k, n-k) }, whose element y stands for the
// multisegment y'.

#include "lindeg/combinatorics.hpp"
#include "lindeg/laurent.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <vector>

namespace lindeg {

/// Largest n the algebraic pipeline accepts unless explicitly raised.
inline constexpr int kDefaultMaxExpansionN = 7;

/// The parameter set P for a fixed n, in lexicographic order, with O(n)
/// tuple <-> index conversion.
class ParameterSet {
 public:
  explicit ParameterSet(int n);

  int n() const { return n_; }
  std::size_t size() const { return tuples_.size(); }
  const PTuple& operator[](std::size_t idx) const { return tuples_[idx]; }
  const std::vector<PTuple>& tuples() const { return tuples_; }
  std::size_t index_of(const PTuple& y) const;
  const PTuple& top() const { return tuples_.back(); }

  /// Indices sorted by descending total, ties by descending lexicographic order.
  const std::vector<std::size_t>& descending_order() const { return descending_; }

  /// Visits, in lexicographic order, the indices of all z with lo <= z <= hi.
  void for_each_between(const PTuple& lo, const PTuple& hi, const std::function<void(std::size_t)>& visit) const;

 private:
  int n_;
  std::vector<PTuple> tuples_;
  std::vector<std::size_t> strides_;
  std::vector<std::size_t> descending_;
};

/// Coefficients indexed by P; zero coefficients are never stored.
class Expansion {
 public:
  explicit Expansion(int n) : n_(n) {}

  int n() const { return n_; }
  const std::map<PTuple, LaurentPoly>& coeffs() const { return coeffs_; }
  bool contains(const PTuple& y) const { return coeffs_.contains(y); }
  /// Zero when y is absent.
  LaurentPoly at(const PTuple& y) const;
  /// Stores c, or erases y when c is zero.
  void set(const PTuple& y, LaurentPoly c);

 private:
  int n_;
  std::map<PTuple, LaurentPoly> coeffs_;
};

/// Lower-triangular matrix over P: entries (x, y) exist only for y <= x.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(std::shared_ptr<const ParameterSet> params);

  int n() const { return params_->n(); }
  const ParameterSet& params() const { return *params_; }
  std::shared_ptr<const ParameterSet> params_ptr() const { return params_; }

  /// Entry (x, y); the zero polynomial when y is not <= x.
  const LaurentPoly& at(const PTuple& x, const PTuple& y) const;
  const LaurentPoly& at(std::size_t x, std::size_t y) const;
  /// Throws std::invalid_argument when y is not <= x.
  void set(std::size_t x, std::size_t y, LaurentPoly value);

 private:
  std::size_t local_index(std::size_t x, std::size_t y) const;

  std::shared_ptr<const ParameterSet> params_;
  std::vector<std::vector<LaurentPoly>> rows_;
};

/// E_i^{(a)} E_{i+1}^{(b)} E_i^{(c)}: the coefficient of
/// E_i^{(a+c-r)} E_{i,i+1}^{(r)} E_{i+1}^{(b-r)} for each 0 <= r <= min(b, c).
std::map<int, LaurentPoly> rank2_expand(int a, int b, int c);

/// PBW coefficients of E_1^{(f_1)}...E_n^{(f_n)} E_1^{(e_1)}...E_n^{(e_n)},
/// keyed by x with 0 <= x_i <= min(e_i, f_{i+1}).
std::map<std::vector<int>, LaurentPoly> expand_two_row(const std::vector<int>& e, const std::vector<int>& f);

/// PBW coefficient lambda_y of M at E(y').
LaurentPoly lambda_coeff(const PTuple& y);

/// Bar-involution coefficient w^{x'}_{y'}; zero unless y <= x.
LaurentPoly w_coeff(const PTuple& x, const PTuple& y);

TransitionMatrix w_matrix(int n);
TransitionMatrix w_matrix(std::shared_ptr<const ParameterSet> params);

/// Canonical-to-PBW coefficients zeta^{x'}_{y'} solved from the bar
/// coefficients. Throws std::logic_error if a right-hand side is not
/// bar-antisymmetric or has a constant term.
TransitionMatrix zeta_matrix(int n);
TransitionMatrix zeta_matrix(const TransitionMatrix& w);

/// Canonical-basis coefficients mu_y of M, by back-substitution in
/// lambda_y = sum_{x >= y} mu_x zeta^{x'}_{y'}.
Expansion mu_coeffs(int n);
Expansion mu_coeffs(const TransitionMatrix& zeta);

/// Closed-form degree of lambda_y.
int deg_lambda(const PTuple& y);
/// Closed-form deg_lambda(y) - deg_lambda(z).
int deg_diff(const PTuple& y, const PTuple& z);

}  // namespace lindeg
