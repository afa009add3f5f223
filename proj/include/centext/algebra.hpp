#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "centext/types.hpp"

namespace centext {

/// A finite-dimensional algebra with one bilinear bracket, given by
/// structure constants [e_i, e_j] = sum_k c(i, j, k) e_k.
///
/// The constants are stored as a (dim*dim) x dim table whose row i*dim+j is
/// the coordinate vector of [e_i, e_j]; in row-vector form the bracket is
/// kron(u, v) * table. Copies share the immutable payload.
class Algebra {
 public:
  struct Product {
    Index left;
    Index right;
    Index target;
    Scalar coefficient;
  };

  /// The zero algebra over Q.
  Algebra();
  Algebra(Field field, std::vector<std::string> labels, Matrix table);

  static Algebra from_products(Field field, std::vector<std::string> labels, const std::vector<Product>& products);
  static Algebra zero(Field field);
  static Algebra abelian(Field field, Index dim, const std::string& prefix = "e");

  const Field& field() const { return data_->field; }
  Index dim() const { return static_cast<Index>(data_->labels.size()); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const Matrix& table() const { return data_->table; }

  /// Coordinates of [e_i, e_j].
  RowVector product(Index i, Index j) const { return data_->table.row(i * dim() + j); }
  RowVector basis_vector(Index i) const { return unit_vector(dim(), i, field()); }
  RowVector zero_vector() const { return RowVector::Constant(dim(), field().zero()); }

  /// Matrix of x |-> [x, e_j]: row k is [e_k, e_j].
  Matrix right_multiplication(Index j) const;
  /// Matrix of x |-> [e_i, x]: row k is [e_i, e_k].
  Matrix left_multiplication(Index i) const;

  std::vector<Product> nonzero_products() const;

  /// Same field and structure constants; labels ignored.
  bool same_structure(const Algebra& other) const;
  /// Same field, labels and structure constants.
  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  struct Data {
    Field field;
    std::vector<std::string> labels;
    Matrix table;
  };
  std::shared_ptr<const Data> data_;
};

/// Bilinear evaluation of the bracket on coordinate vectors.
RowVector bracket(const Algebra& a, const RowVector& u, const RowVector& v);

/// A linear map between the underlying spaces (row convention: dim(domain) x dim(codomain)).
class LinearMap {
 public:
  LinearMap(Algebra domain, Algebra codomain, Matrix matrix);

  static LinearMap identity(const Algebra& a);
  static LinearMap zero(const Algebra& domain, const Algebra& codomain);

  const Algebra& domain() const { return domain_; }
  const Algebra& codomain() const { return codomain_; }
  const Matrix& matrix() const { return matrix_; }
  bool morphism_certified() const { return certified_; }

  RowVector apply(const RowVector& v) const { return v * matrix_; }

  /// Copy with the morphism flag set after checking multiplicativity;
  /// throws PreconditionError if the map is not a morphism.
  LinearMap certified() const;

 private:
  Algebra domain_;
  Algebra codomain_;
  Matrix matrix_;
  bool certified_ = false;
};

/// Subspace of an algebra, with a flag recording that ideal closure was checked.
struct IdealWitness {
  Subspace subspace;
  bool closure_certified = false;
};

bool is_morphism(const LinearMap& f);
/// Like LinearMap::certified(), but a failure is an internal AssertionFailure.
LinearMap expect_morphism(const LinearMap& f, const std::string& what);

bool is_surjective(const LinearMap& f);
bool is_injective(const LinearMap& f);
bool is_isomorphism(const LinearMap& f);

/// "g after f"; requires f.codomain() to have the structure of g.domain().
LinearMap compose(const LinearMap& g, const LinearMap& f);

bool is_ideal(const Algebra& a, const Subspace& s);
bool is_subalgebra(const Algebra& a, const Subspace& s);

/// Smallest ideal containing s (left/right bracket closure by fixpoint iteration).
IdealWitness ideal_generated(const Algebra& a, const Subspace& s);
/// Certifies an existing ideal; throws PreconditionError if s is not one.
IdealWitness as_ideal(const Algebra& a, const Subspace& s);
/// Smallest subalgebra containing s.
Subspace subalgebra_generated(const Algebra& a, const Subspace& s);

struct QuotientAlgebra {
  Algebra algebra;
  LinearMap proj;
  Matrix section;  // quotient x ambient, section * proj = identity
};

QuotientAlgebra quotient_algebra(const Algebra& a, const IdealWitness& ideal);

struct SubalgebraView {
  Algebra algebra;
  LinearMap inclusion;
};

/// The subalgebra spanned by s, with basis s.basis() and its inclusion.
SubalgebraView subalgebra(const Algebra& a, const Subspace& s);

struct DirectProduct {
  Algebra algebra;
  LinearMap p1, p2;
  LinearMap i1, i2;
};

DirectProduct direct_product(const Algebra& a, const Algebra& b);

struct FibreProduct {
  Algebra algebra;
  LinearMap p1, p2;
  /// Only for kernel pairs (f = g): b |-> (b, b).
  std::optional<LinearMap> diagonal;
};

/// {(b, c) : f(b) = g(c)} as a subalgebra of the direct product.
FibreProduct fibre_product(const LinearMap& f, const LinearMap& g);
FibreProduct kernel_pair(const LinearMap& f);

/// {z : [z, b] = 0 = [b, z] for all b}.
Subspace centre(const Algebra& a);

struct BasisChange {
  Algebra algebra;  // same algebra in the new basis
  LinearMap to_old;  // isomorphism new -> old (its matrix is the change of basis)
};

/// Rewrites `a` in the basis given by the rows of the invertible matrix p.
BasisChange change_basis(const Algebra& a, const Matrix& p, const std::string& prefix = "v");

/// Human-readable labels for the rows of a basis matrix (distinct).
std::vector<std::string> labels_for_rows(const Algebra& a, const Matrix& rows, const std::string& prefix = "w");
std::vector<std::string> labels_for_rows(const std::vector<std::string>& names, const Matrix& rows,
                                         const std::string& prefix = "w");

}  // namespace centext
