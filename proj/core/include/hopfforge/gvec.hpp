#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfforge/field.hpp"

namespace hopfforge {

struct GradingMismatch : std::runtime_error {
    GradingMismatch() : std::runtime_error("objects live over different gradings") {}
};
struct ShapeMismatch : std::runtime_error {
    explicit ShapeMismatch(const std::string& what) : std::runtime_error("shape mismatch: " + what) {}
};

/// Element of the (finite abelian) grading group, one residue per cyclic factor.
using Deg = std::vector<std::uint32_t>;

struct GradingGroup {
    std::vector<std::uint32_t> orders;  // empty = trivial group

    std::size_t rank() const { return orders.size(); }
    Deg zero() const { return Deg(orders.size(), 0); }
    Deg add(const Deg& a, const Deg& b) const;
    bool valid(const Deg& d) const;
};

/// Grading group plus bicharacter plus ground field: the data determining the
/// braided category we compute in. Bicharacter values are given on generator
/// pairs and extended biadditively. Over the rationals only +-1 is allowed.
class GradingCtx {
  public:
    GradingCtx(FieldSpec field, GradingGroup group, std::vector<std::vector<Scalar>> chi_on_generators);

    const FieldSpec& field() const { return field_; }
    const GradingGroup& group() const { return group_; }
    const std::vector<std::vector<Scalar>>& chi_table() const { return chi_; }

    Scalar chi(const Deg& a, const Deg& b) const;
    Scalar chi_inv(const Deg& a, const Deg& b) const;

    static std::shared_ptr<const GradingCtx> trivial(FieldSpec field);

  private:
    FieldSpec field_;
    GradingGroup group_;
    std::vector<std::vector<Scalar>> chi_;
};

using Ctx = std::shared_ptr<const GradingCtx>;

/// Atomic graded object: a named list of basis degrees, sorted degree-lex.
struct Atom {
    std::string name;
    std::vector<Deg> degs;
};
using AtomPtr = std::shared_ptr<const Atom>;

/// degrees given as (degree, multiplicity); basis vectors within a degree keep their order
AtomPtr make_atom(const std::string& name, const std::map<Deg, std::size_t>& dims);
AtomPtr make_atom_ungraded(const std::string& name, std::size_t dim, const GradingGroup& g);

/// An object of the category: a tensor word of atoms (empty word = unit
/// object). The canonical ordered basis sorts basis tuples by degree-lex,
/// ties broken by tuple-lex; this makes the tensor strictly associative.
class Obj {
  public:
    Obj() = default;
    Obj(Ctx ctx, std::vector<AtomPtr> word);

    static Obj unit(Ctx ctx) { return Obj(std::move(ctx), {}); }
    static Obj atom(Ctx ctx, AtomPtr a) { return Obj(std::move(ctx), {std::move(a)}); }

    const Ctx& ctx() const { return ctx_; }
    const std::vector<AtomPtr>& word() const { return word_; }
    std::size_t dim() const { return dim_; }
    bool is_unit() const { return word_.empty(); }

    /// map degree -> dimension
    std::map<Deg, std::size_t> graded_dims() const;
    /// equality of graded dims (the composition precondition)
    bool graded_equal(const Obj& o) const;
    /// identical word (atom-wise dims and degrees)
    bool word_equal(const Obj& o) const;

    const Deg& slot_degree(std::size_t slot) const;
    std::uint64_t slot_to_tuple(std::size_t slot) const;
    std::size_t tuple_to_slot(std::uint64_t tuple) const;
    Deg tuple_degree(std::uint64_t tuple) const;

    Obj tensor(const Obj& o) const;

  private:
    struct Tables {
        std::vector<Deg> slot_deg;
        std::vector<std::uint64_t> slot_to_tuple;
        std::vector<std::size_t> tuple_to_slot;
    };
    const Tables& tables() const;

    Ctx ctx_;
    std::vector<AtomPtr> word_;
    std::size_t dim_ = 1;
    std::shared_ptr<Tables> tables_;
};

Obj tensor_obj(const Obj& x, const Obj& y);

/// Dense exact matrix, column-major; rational or prime-field backed.
class Mat {
  public:
    Mat() = default;
    Mat(FieldSpec fs, std::size_t rows, std::size_t cols);

    const FieldSpec& field() const { return fs_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& v);

    bool is_rational() const { return fs_.is_rational(); }
    std::vector<mpq_class>& qdata() { return q_; }
    const std::vector<mpq_class>& qdata() const { return q_; }
    std::vector<std::uint64_t>& rdata() { return r_; }
    const std::vector<std::uint64_t>& rdata() const { return r_; }
    std::size_t idx(std::size_t r, std::size_t c) const { return c * rows_ + r; }

    static Mat identity(FieldSpec fs, std::size_t n);
    Mat mul(const Mat& o) const;
    Mat add(const Mat& o) const;
    Mat sub(const Mat& o) const;
    Mat scaled(const Scalar& s) const;
    Mat transpose() const;
    bool equal(const Mat& o) const;
    bool is_zero() const;

  private:
    FieldSpec fs_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpq_class> q_;
    std::vector<std::uint64_t> r_;
};

/// Exact linear algebra used by kernels, convolution inverses and the
/// factorization solves of the projection module.
std::size_t mat_rank(const Mat& m);
/// basis of the null space, reduced column-echelon normalization
Mat null_space(const Mat& m);
/// basis of the left null space as rows, reduced row-echelon normalization
Mat left_null_space(const Mat& m);
/// solve a * x = b for all columns of b; nullopt if inconsistent
std::optional<Mat> solve_columns(const Mat& a, const Mat& b);
/// solve x * a = b; nullopt if inconsistent
std::optional<Mat> solve_rows(const Mat& a, const Mat& b);
/// solve with a permuted elimination order (used by the uniqueness re-check)
std::optional<Mat> solve_columns_permuted(const Mat& a, const Mat& b, std::uint64_t seed);
std::optional<Mat> invert(const Mat& m);

/// Degree-preserving morphism between graded objects.
class Mor {
  public:
    Mor() = default;
    Mor(Obj dom, Obj cod, Mat mat, bool validate = true);

    const Obj& dom() const { return dom_; }
    const Obj& cod() const { return cod_; }
    const Mat& mat() const { return mat_; }
    Mat& mat_mut() { return mat_; }
    const Ctx& ctx() const { return dom_.ctx(); }
    const FieldSpec& field() const { return mat_.field(); }

    Scalar entry(std::size_t r, std::size_t c) const { return mat_.get(r, c); }

    static Mor zero(const Obj& dom, const Obj& cod);
    static Mor identity(const Obj& x);
    static Mor from_triplets(const Obj& dom, const Obj& cod,
                             const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& entries);

    Mor scaled(const Scalar& s) const;
    Mor add(const Mor& o) const;
    Mor sub(const Mor& o) const;
    /// plain matrix transpose, viewed dom<->cod (the dual-fixture helper)
    Mor transposed() const;

  private:
    Obj dom_, cod_;
    Mat mat_;
};

struct EqWitness {
    std::size_t row = 0, col = 0;
    Scalar lhs, rhs;
};

Mor compose(const Mor& f, const Mor& g);  // f after g
Mor tensor(const Mor& f, const Mor& g);
Mor braiding(const Obj& x, const Obj& y);
Mor braiding_inv(const Obj& x, const Obj& y);

bool mor_equal(const Mor& f, const Mor& g);
std::optional<EqWitness> mor_diff(const Mor& f, const Mor& g);

/// (K, j) with f∘j = 0, j injective of maximal rank, computed degreewise
std::pair<Obj, Mor> kernel(const Mor& f);
/// (Q, p) with p∘f = 0, p surjective, computed degreewise
std::pair<Obj, Mor> cokernel(const Mor& f);

/// One slice of a composition pipeline: a tensor product of morphism factors.
/// Factors may create strands (unit-domain) or end them (unit-codomain).
struct Stage {
    std::vector<Mor> factors;
    Stage(std::initializer_list<Mor> fs) : factors(fs) {}
    explicit Stage(std::vector<Mor> fs) : factors(std::move(fs)) {}
};

/// A morphism given as stages to be composed top to bottom. Evaluation pushes
/// sparse columns through the stages, so wide intermediate tensor words never
/// materialize as dense matrices.
class Pipe {
  public:
    Pipe(Obj dom, std::vector<Stage> stages);
    explicit Pipe(Mor m);

    const Obj& dom() const { return dom_; }
    const Obj& cod() const { return cod_; }

    Mor eval() const;

  private:
    friend std::optional<EqWitness> pipe_diff(const Pipe& a, const Pipe& b);
    Obj dom_, cod_;
    std::vector<Stage> stages_;
};

/// first differing coordinate of two pipelines with common dom/cod, streamed column by column
std::optional<EqWitness> pipe_diff(const Pipe& a, const Pipe& b);

/// worker cap: min(hardware, HOPFFORGE_THREADS if set)
unsigned worker_count();

}  // namespace hopfforge
