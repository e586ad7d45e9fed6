#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "asc/arith.hpp"

namespace asc {

struct Quiver {
  struct Arrow {
    std::string label;
    int source;
    int target;
  };
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& label) const;  // -1 if absent
  int arrow_index(const std::string& label) const;   // -1 if absent
  int add_vertex(const std::string& label);
  int add_arrow(const std::string& label, int source, int target);
};

// A path stored in application order: arrows[0] acts first. A path with no
// arrows is the trivial path at `vertex`.
struct Path {
  int vertex = 0;
  std::vector<int> arrows;

  int source(const Quiver& q) const {
    return arrows.empty() ? vertex : q.arrows[arrows.front()].source;
  }
  int target(const Quiver& q) const {
    return arrows.empty() ? vertex : q.arrows[arrows.back()].target;
  }
  std::size_t length() const { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

enum class CompositionOrder { Functional, Diagrammatic };

// Renders a path in the given composition order, e.g. "beta.gamma.betastar".
std::string path_label(const Quiver& q, const Path& p,
                       CompositionOrder order = CompositionOrder::Functional);

struct PathExpr {
  std::vector<std::pair<Scalar, Path>> terms;
};

struct BoundQuiverAlgebra {
  Quiver quiver;
  std::vector<PathExpr> relations;
  // Order the relations were written in; the stored paths are always in
  // application order.
  CompositionOrder order = CompositionOrder::Functional;
};

// Builds a relation term from arrow labels written in `order`; throws
// MalformedRelation if the arrows do not compose.
Path parse_path(const Quiver& q, const std::vector<std::string>& arrow_labels,
                CompositionOrder order);

class BasedAlgebra;
using AlgebraPtr = std::shared_ptr<const BasedAlgebra>;

using SparseVector = std::vector<std::pair<std::uint32_t, Scalar>>;

// A finite-dimensional split basic algebra with a distinguished basis,
// structure constants, and a complete set of primitive orthogonal
// idempotents. On construction the Gabriel quiver is derived: the Jacobson
// radical (kernel of the trace form), arrows spanning rad/rad^2 between
// idempotents, and a basis of words in those arrows. Modules are stored as
// representations of that quiver.
class BasedAlgebra : public std::enable_shared_from_this<BasedAlgebra> {
 public:
  struct Arrow {
    int source;
    int target;
    Vector element;
    std::string label;
  };
  struct Word {
    int source;
    int target;
    std::vector<int> arrows;  // application order, indices into arrows()
    Vector element;
  };

  // table[i * dim + j] = b_i * b_j in basis coordinates.
  static AlgebraPtr create(std::vector<std::string> labels,
                           std::vector<SparseVector> table, Vector unit,
                           std::vector<Vector> idempotents,
                           std::vector<std::string> vertex_labels);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector& unit() const { return unit_; }
  const std::vector<Vector>& idempotents() const { return idempotents_; }
  std::size_t vertex_count() const { return idempotents_.size(); }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  int vertex_index(const std::string& label) const;

  const SparseVector& product(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }
  Vector multiply(const Vector& x, const Vector& y) const;
  Vector basis_vector(std::size_t i) const;
  // Matrix of left multiplication by x on the algebra itself.
  Matrix left_multiplication(const Vector& x) const;
  Matrix right_multiplication(const Vector& x) const;

  const Matrix& radical() const { return radical_; }  // basis as columns
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<Word>& words() const { return words_; }
  // Coordinates of x in the word basis.
  Vector word_coordinates(const Vector& x) const { return word_coords_.of(x); }
  std::size_t loewy_length() const { return loewy_length_; }

  // Structural identity: same dimension and structure constants, same
  // idempotents. Modules over equal algebras are interchangeable.
  bool same_as(const BasedAlgebra& other) const;
  std::uint64_t fingerprint() const { return fingerprint_; }

  // Opposite algebra; opposite(opposite(a)) returns a itself while a lives.
  AlgebraPtr opposite() const;

  // Exhaustive check of associativity, unit and idempotent axioms.
  bool verify_axioms(std::string* failure = nullptr) const;

 private:
  BasedAlgebra() = default;
  void derive_quiver();

  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;
  Vector unit_;
  std::vector<Vector> idempotents_;
  std::vector<std::string> vertex_labels_;

  Matrix radical_;
  std::vector<Arrow> arrows_;
  std::vector<Word> words_;
  Coordinates word_coords_;
  std::size_t loewy_length_ = 0;
  std::uint64_t fingerprint_ = 0;

  mutable std::once_flag opposite_once_;
  mutable AlgebraPtr opposite_;
  std::weak_ptr<const BasedAlgebra> opposite_origin_;
};

inline constexpr std::size_t kDefaultMaxLength = 64;

// Path algebra modulo the two-sided ideal generated by the relations.
AlgebraPtr compile(const BoundQuiverAlgebra& bqa,
                   std::size_t max_len = kDefaultMaxLength);
AlgebraPtr opposite(const AlgebraPtr& a);
AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// Double quiver of linear A_n with the preprojective relations.
BoundQuiverAlgebra preprojective(int n);
// Four vertices, arrows alpha:1->4, alphastar:2->1, beta:2->3,
// betastar:3->4, gamma:4->2 and relations beta.gamma.betastar,
// alphastar.gamma.alpha, alpha.alphastar - betastar.beta, alpha.alphastar.gamma.
BoundQuiverAlgebra gamma_bound_quiver();
BoundQuiverAlgebra linear_quiver(int n);  // 1 -> 2 -> ... -> n, no relations
BoundQuiverAlgebra truncated_loop(int power);  // k[x]/(x^power)
AlgebraPtr ground_field();
AlgebraPtr dual_numbers();

}  // namespace asc
