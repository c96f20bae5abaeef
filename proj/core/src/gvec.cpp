#include "hopfforge/gvec.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <thread>

namespace hopfforge {

// ---------------------------------------------------------------------------
// grading

Deg GradingGroup::add(const Deg& a, const Deg& b) const {
    Deg r(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) r[i] = (a[i] + b[i]) % orders[i];
    return r;
}

bool GradingGroup::valid(const Deg& d) const {
    if (d.size() != orders.size()) return false;
    for (std::size_t i = 0; i < orders.size(); ++i)
        if (d[i] >= orders[i]) return false;
    return true;
}

static std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

GradingCtx::GradingCtx(FieldSpec field, GradingGroup group, std::vector<std::vector<Scalar>> chi)
    : field_(field), group_(std::move(group)), chi_(std::move(chi)) {
    const std::size_t r = group_.rank();
    for (auto n : group_.orders)
        if (n < 1) throw std::invalid_argument("cyclic factor order must be >= 1");
    if (chi_.size() != r) throw std::invalid_argument("bicharacter table has wrong rank");
    for (std::size_t i = 0; i < r; ++i) {
        if (chi_[i].size() != r) throw std::invalid_argument("bicharacter table has wrong rank");
        for (std::size_t j = 0; j < r; ++j) {
            const Scalar& v = chi_[i][j];
            if (v.field() != field_) throw FieldMismatch();
            if (v.is_zero()) throw std::invalid_argument("bicharacter values must be nonzero");
            std::uint64_t ord = lcm_u64(group_.orders[i], group_.orders[j]);
            if (!v.pow(static_cast<long long>(ord)).is_one())
                throw std::invalid_argument("bicharacter value does not have the forced order");
            if (field_.is_rational() && !(v.is_one() || (-v).is_one()))
                throw std::invalid_argument("over the rationals bicharacter values must be +-1");
        }
    }
}

Scalar GradingCtx::chi(const Deg& a, const Deg& b) const {
    Scalar res = Scalar::one(field_);
    for (std::size_t i = 0; i < chi_.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < chi_.size(); ++j) {
            if (b[j] == 0) continue;
            res = res * chi_[i][j].pow(static_cast<long long>(a[i]) * b[j]);
        }
    }
    return res;
}

Scalar GradingCtx::chi_inv(const Deg& a, const Deg& b) const { return chi(a, b).inverse(); }

std::shared_ptr<const GradingCtx> GradingCtx::trivial(FieldSpec field) {
    return std::make_shared<GradingCtx>(field, GradingGroup{}, std::vector<std::vector<Scalar>>{});
}

// ---------------------------------------------------------------------------
// atoms and objects

AtomPtr make_atom(const std::string& name, const std::map<Deg, std::size_t>& dims) {
    auto a = std::make_shared<Atom>();
    a->name = name;
    for (const auto& [d, n] : dims)
        for (std::size_t k = 0; k < n; ++k) a->degs.push_back(d);
    return a;
}

AtomPtr make_atom_ungraded(const std::string& name, std::size_t dim, const GradingGroup& g) {
    return make_atom(name, {{g.zero(), dim}});
}

Obj::Obj(Ctx ctx, std::vector<AtomPtr> word) : ctx_(std::move(ctx)), word_(std::move(word)) {
    dim_ = 1;
    for (const auto& a : word_) dim_ *= a->degs.size();
    if (dim_ > (std::size_t{1} << 24))
        throw std::invalid_argument("object too large for dense basis enumeration");
}

const Obj::Tables& Obj::tables() const {
    if (tables_) return *tables_;
    auto t = std::make_shared<Tables>();
    const std::size_t n = dim_;
    t->slot_deg.resize(n);
    t->slot_to_tuple.resize(n);
    t->tuple_to_slot.resize(n);
    std::vector<Deg> deg_of_tuple(n);
    for (std::uint64_t tup = 0; tup < n; ++tup) deg_of_tuple[tup] = tuple_degree(tup);
    std::vector<std::uint64_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
        if (deg_of_tuple[a] != deg_of_tuple[b]) return deg_of_tuple[a] < deg_of_tuple[b];
        return a < b;
    });
    for (std::size_t slot = 0; slot < n; ++slot) {
        std::uint64_t tup = order[slot];
        t->slot_to_tuple[slot] = tup;
        t->tuple_to_slot[tup] = slot;
        t->slot_deg[slot] = deg_of_tuple[tup];
    }
    const_cast<Obj*>(this)->tables_ = std::move(t);
    return *tables_;
}

std::map<Deg, std::size_t> Obj::graded_dims() const {
    std::map<Deg, std::size_t> out;
    for (const auto& d : tables().slot_deg) ++out[d];
    return out;
}

bool Obj::graded_equal(const Obj& o) const {
    if (dim_ != o.dim_) return false;
    return tables().slot_deg == o.tables().slot_deg;  // both canonically sorted
}

bool Obj::word_equal(const Obj& o) const {
    if (word_.size() != o.word_.size()) return false;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (word_[i] == o.word_[i]) continue;
        if (word_[i]->degs != o.word_[i]->degs) return false;
    }
    return true;
}

const Deg& Obj::slot_degree(std::size_t slot) const { return tables().slot_deg[slot]; }
std::uint64_t Obj::slot_to_tuple(std::size_t slot) const { return tables().slot_to_tuple[slot]; }
std::size_t Obj::tuple_to_slot(std::uint64_t tuple) const { return tables().tuple_to_slot[tuple]; }

Deg Obj::tuple_degree(std::uint64_t tuple) const {
    Deg d = ctx_->group().zero();
    std::uint64_t rest = tuple;
    for (std::size_t k = word_.size(); k-- > 0;) {
        std::uint64_t ad = word_[k]->degs.size();
        d = ctx_->group().add(d, word_[k]->degs[rest % ad]);
        rest /= ad;
    }
    return d;
}

Obj Obj::tensor(const Obj& o) const {
    if (ctx_ != o.ctx_) throw GradingMismatch();
    std::vector<AtomPtr> w = word_;
    w.insert(w.end(), o.word_.begin(), o.word_.end());
    return Obj(ctx_, std::move(w));
}

Obj tensor_obj(const Obj& x, const Obj& y) { return x.tensor(y); }

// ---------------------------------------------------------------------------
// matrices

Mat::Mat(FieldSpec fs, std::size_t rows, std::size_t cols) : fs_(fs), rows_(rows), cols_(cols) {
    if (fs_.is_rational())
        q_.assign(rows * cols, mpq_class(0));
    else
        r_.assign(rows * cols, 0);
}

Scalar Mat::get(std::size_t r, std::size_t c) const {
    return fs_.is_rational() ? Scalar::from_mpq(fs_, q_[idx(r, c)]) : Scalar::from_residue(fs_, r_[idx(r, c)]);
}

void Mat::set(std::size_t r, std::size_t c, const Scalar& v) {
    if (v.field() != fs_) throw FieldMismatch();
    if (fs_.is_rational())
        q_[idx(r, c)] = v.rational();
    else
        r_[idx(r, c)] = v.residue();
}

Mat Mat::identity(FieldSpec fs, std::size_t n) {
    Mat m(fs, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(fs));
    return m;
}

namespace {

struct RatOps {
    using T = mpq_class;
    T zero() const { return T(0); }
    T one() const { return T(1); }
    bool is_zero(const T& a) const { return a == 0; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T div(const T& a, const T& b) const { return a / b; }
    T neg(const T& a) const { return -a; }
    void add_assign(T& a, const T& b) const { a += b; }
    void submul(T& a, const T& b, const T& c) const { a -= b * c; }
};

struct FpOps {
    std::uint64_t p;
    using T = std::uint64_t;
    T zero() const { return 0; }
    T one() const { return 1 % p; }
    bool is_zero(const T& a) const { return a == 0; }
    T add(const T& a, const T& b) const { return fp_add(a, b, p); }
    T sub(const T& a, const T& b) const { return fp_sub(a, b, p); }
    T mul(const T& a, const T& b) const { return fp_mul(a, b, p); }
    T div(const T& a, const T& b) const { return fp_mul(a, fp_inv(b, p), p); }
    T neg(const T& a) const { return a == 0 ? 0 : p - a; }
    void add_assign(T& a, const T& b) const { a = fp_add(a, b, p); }
    void submul(T& a, const T& b, const T& c) const { a = fp_sub(a, fp_mul(b, c, p), p); }
};

template <class Ops>
const std::vector<typename Ops::T>& data_of(const Mat& m);
template <>
const std::vector<mpq_class>& data_of<RatOps>(const Mat& m) {
    return m.qdata();
}
template <>
const std::vector<std::uint64_t>& data_of<FpOps>(const Mat& m) {
    return m.rdata();
}
template <class Ops>
std::vector<typename Ops::T>& data_of_mut(Mat& m);
template <>
std::vector<mpq_class>& data_of_mut<RatOps>(Mat& m) {
    return m.qdata();
}
template <>
std::vector<std::uint64_t>& data_of_mut<FpOps>(Mat& m) {
    return m.rdata();
}

Scalar boxed(const FieldSpec& fs, const mpq_class& v) { return Scalar::from_mpq(fs, v); }
Scalar boxed(const FieldSpec& fs, std::uint64_t v) { return Scalar::from_residue(fs, v); }

template <class F>
auto with_ops(const FieldSpec& fs, F&& f) {
    if (fs.is_rational()) return f(RatOps{});
    return f(FpOps{fs.p});
}

template <class Ops>
void mul_impl(const Ops& ops, const Mat& a, const Mat& b, Mat& out) {
    const auto& A = data_of<Ops>(a);
    const auto& B = data_of<Ops>(b);
    auto& C = data_of_mut<Ops>(out);
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t t = 0; t < k; ++t) {
            const auto& btc = B[c * k + t];
            if (ops.is_zero(btc)) continue;
            const std::size_t abase = t * n, cbase = c * n;
            for (std::size_t r = 0; r < n; ++r) {
                const auto& a_rt = A[abase + r];
                if (!ops.is_zero(a_rt)) ops.add_assign(C[cbase + r], ops.mul(a_rt, btc));
            }
        }
}

}  // namespace

Mat Mat::mul(const Mat& o) const {
    if (fs_ != o.fs_) throw FieldMismatch();
    if (cols_ != o.rows_) throw ShapeMismatch("matrix product dimensions");
    Mat out(fs_, rows_, o.cols_);
    with_ops(fs_, [&](auto ops) {
        mul_impl(ops, *this, o, out);
        return 0;
    });
    return out;
}

Mat Mat::add(const Mat& o) const {
    if (fs_ != o.fs_ || rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum");
    Mat out = *this;
    with_ops(fs_, [&](auto ops) {
        auto& C = data_of_mut<decltype(ops)>(out);
        const auto& B = data_of<decltype(ops)>(o);
        for (std::size_t i = 0; i < C.size(); ++i) C[i] = ops.add(C[i], B[i]);
        return 0;
    });
    return out;
}

Mat Mat::sub(const Mat& o) const {
    if (fs_ != o.fs_ || rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix difference");
    Mat out = *this;
    with_ops(fs_, [&](auto ops) {
        auto& C = data_of_mut<decltype(ops)>(out);
        const auto& B = data_of<decltype(ops)>(o);
        for (std::size_t i = 0; i < C.size(); ++i) C[i] = ops.sub(C[i], B[i]);
        return 0;
    });
    return out;
}

Mat Mat::scaled(const Scalar& s) const {
    if (s.field() != fs_) throw FieldMismatch();
    Mat out = *this;
    with_ops(fs_, [&](auto ops) {
        auto& C = data_of_mut<decltype(ops)>(out);
        if constexpr (std::is_same_v<decltype(ops), RatOps>) {
            for (auto& v : C) v *= s.rational();
        } else {
            for (auto& v : C) v = ops.mul(v, s.residue());
        }
        return 0;
    });
    return out;
}

Mat Mat::transpose() const {
    Mat out(fs_, cols_, rows_);
    with_ops(fs_, [&](auto ops) {
        const auto& A = data_of<decltype(ops)>(*this);
        auto& B = data_of_mut<decltype(ops)>(out);
        for (std::size_t c = 0; c < cols_; ++c)
            for (std::size_t r = 0; r < rows_; ++r) B[r * cols_ + c] = A[c * rows_ + r];
        return 0;
    });
    return out;
}

bool Mat::equal(const Mat& o) const {
    if (fs_ != o.fs_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    return fs_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

bool Mat::is_zero() const {
    if (fs_.is_rational()) {
        for (const auto& v : q_)
            if (v != 0) return false;
    } else {
        for (auto v : r_)
            if (v) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// exact elimination

namespace {

// in-place reduction to reduced row echelon form; returns pivot columns.
// only the first `cols` columns are eliminated, the rest ride along.
template <class Ops>
std::vector<std::size_t> rref_impl(const Ops& ops, std::vector<typename Ops::T>& d, std::size_t rows,
                                   std::size_t allcols, std::size_t cols,
                                   const std::vector<std::size_t>* col_order = nullptr) {
    auto at = [&](std::size_t r, std::size_t c) -> typename Ops::T& { return d[c * rows + r]; };
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t ci = 0; ci < cols && row < rows; ++ci) {
        std::size_t c = col_order ? (*col_order)[ci] : ci;
        std::size_t pr = row;
        while (pr < rows && ops.is_zero(at(pr, c))) ++pr;
        if (pr == rows) continue;
        if (pr != row)
            for (std::size_t cc = 0; cc < allcols; ++cc) std::swap(at(row, cc), at(pr, cc));
        auto inv = ops.div(ops.one(), at(row, c));
        for (std::size_t cc = 0; cc < allcols; ++cc)
            if (!ops.is_zero(at(row, cc))) at(row, cc) = ops.mul(at(row, cc), inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || ops.is_zero(at(r, c))) continue;
            auto f = at(r, c);
            for (std::size_t cc = 0; cc < allcols; ++cc)
                if (!ops.is_zero(at(row, cc))) ops.submul(at(r, cc), f, at(row, cc));
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

template <class Ops>
std::optional<Mat> solve_impl(const Ops& ops, const Mat& a, const Mat& b, const std::vector<std::size_t>* col_order) {
    const std::size_t rows = a.rows(), n = a.cols(), k = b.cols();
    if (b.rows() != rows) throw ShapeMismatch("solve dimensions");
    std::vector<typename Ops::T> d(data_of<Ops>(a));
    d.insert(d.end(), data_of<Ops>(b).begin(), data_of<Ops>(b).end());
    auto pivots = rref_impl(ops, d, rows, n + k, n, col_order);
    auto at = [&](std::size_t r, std::size_t c) -> const typename Ops::T& { return d[c * rows + r]; };
    for (std::size_t r = pivots.size(); r < rows; ++r)
        for (std::size_t c = 0; c < k; ++c)
            if (!ops.is_zero(at(r, n + c))) return std::nullopt;
    Mat x(a.field(), n, k);
    auto& X = data_of_mut<Ops>(x);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
        for (std::size_t c = 0; c < k; ++c) X[c * n + pivots[pi]] = at(pi, n + c);
    return x;
}

}  // namespace

std::size_t mat_rank(const Mat& m) {
    return with_ops(m.field(), [&](auto ops) -> std::size_t {
        std::vector<typename decltype(ops)::T> d(data_of<decltype(ops)>(m));
        return rref_impl(ops, d, m.rows(), m.cols(), m.cols()).size();
    });
}

Mat null_space(const Mat& m) {
    return with_ops(m.field(), [&](auto ops) -> Mat {
        using T = typename decltype(ops)::T;
        std::vector<T> d(data_of<decltype(ops)>(m));
        const std::size_t rows = m.rows(), cols = m.cols();
        auto pivots = rref_impl(ops, d, rows, cols, cols);
        std::vector<bool> is_pivot(cols, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < cols; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
        Mat out(m.field(), cols, free_cols.size());
        auto& O = data_of_mut<decltype(ops)>(out);
        for (std::size_t j = 0; j < free_cols.size(); ++j) {
            std::size_t f = free_cols[j];
            std::vector<T> v(cols, ops.zero());
            v[f] = ops.one();
            for (std::size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = ops.neg(d[f * rows + pi]);
            // echelon normalization: leading coefficient 1
            std::size_t lead = 0;
            while (lead < cols && ops.is_zero(v[lead])) ++lead;
            auto inv = ops.div(ops.one(), v[lead]);
            for (std::size_t r = 0; r < cols; ++r)
                if (!ops.is_zero(v[r])) O[j * cols + r] = ops.mul(v[r], inv);
        }
        return out;
    });
}

Mat left_null_space(const Mat& m) { return null_space(m.transpose()).transpose(); }

std::optional<Mat> solve_columns(const Mat& a, const Mat& b) {
    if (a.field() != b.field()) throw FieldMismatch();
    return with_ops(a.field(), [&](auto ops) { return solve_impl(ops, a, b, nullptr); });
}

std::optional<Mat> solve_columns_permuted(const Mat& a, const Mat& b, std::uint64_t seed) {
    if (a.field() != b.field()) throw FieldMismatch();
    std::vector<std::size_t> order(a.cols());
    std::iota(order.begin(), order.end(), 0);
    std::uint64_t st = seed ? seed : 1;
    for (std::size_t i = order.size(); i > 1; --i) {
        st ^= st << 13;
        st ^= st >> 7;
        st ^= st << 17;
        std::swap(order[i - 1], order[st % i]);
    }
    return with_ops(a.field(), [&](auto ops) { return solve_impl(ops, a, b, &order); });
}

std::optional<Mat> solve_rows(const Mat& a, const Mat& b) {
    auto xt = solve_columns(a.transpose(), b.transpose());
    if (!xt) return std::nullopt;
    return xt->transpose();
}

std::optional<Mat> invert(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    auto x = solve_columns(m, Mat::identity(m.field(), m.rows()));
    if (!x) return std::nullopt;
    if (!m.mul(*x).equal(Mat::identity(m.field(), m.rows()))) return std::nullopt;
    return x;
}

// ---------------------------------------------------------------------------
// morphisms

Mor::Mor(Obj dom, Obj cod, Mat mat, bool validate)
    : dom_(std::move(dom)), cod_(std::move(cod)), mat_(std::move(mat)) {
    if (dom_.ctx() != cod_.ctx()) throw GradingMismatch();
    if (mat_.rows() != cod_.dim() || mat_.cols() != dom_.dim()) throw ShapeMismatch("morphism matrix size");
    if (mat_.field() != dom_.ctx()->field()) throw FieldMismatch();
    if (validate) {
        for (std::size_t c = 0; c < mat_.cols(); ++c)
            for (std::size_t r = 0; r < mat_.rows(); ++r)
                if (!mat_.get(r, c).is_zero() && cod_.slot_degree(r) != dom_.slot_degree(c))
                    throw ShapeMismatch("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                                        ") is not degree-preserving");
    }
}

Mor Mor::zero(const Obj& dom, const Obj& cod) {
    return Mor(dom, cod, Mat(dom.ctx()->field(), cod.dim(), dom.dim()), false);
}

Mor Mor::identity(const Obj& x) { return Mor(x, x, Mat::identity(x.ctx()->field(), x.dim()), false); }

Mor Mor::from_triplets(const Obj& dom, const Obj& cod,
                       const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& entries) {
    Mat m(dom.ctx()->field(), cod.dim(), dom.dim());
    for (const auto& [r, c, v] : entries) m.set(r, c, m.get(r, c) + v);
    return Mor(dom, cod, std::move(m));
}

Mor Mor::scaled(const Scalar& s) const { return Mor(dom_, cod_, mat_.scaled(s), false); }
Mor Mor::add(const Mor& o) const {
    if (!dom_.graded_equal(o.dom_) || !cod_.graded_equal(o.cod_)) throw ShapeMismatch("morphism sum");
    return Mor(dom_, cod_, mat_.add(o.mat_), false);
}
Mor Mor::sub(const Mor& o) const {
    if (!dom_.graded_equal(o.dom_) || !cod_.graded_equal(o.cod_)) throw ShapeMismatch("morphism difference");
    return Mor(dom_, cod_, mat_.sub(o.mat_), false);
}

Mor Mor::transposed() const { return Mor(cod_, dom_, mat_.transpose()); }

Mor compose(const Mor& f, const Mor& g) {
    if (!g.cod().graded_equal(f.dom())) throw ShapeMismatch("composition: inner graded dims differ");
    return Mor(g.dom(), f.cod(), f.mat().mul(g.mat()), false);
}

Mor braiding(const Obj& x, const Obj& y) {
    if (x.ctx() != y.ctx()) throw GradingMismatch();
    Obj dom = x.tensor(y), cod = y.tensor(x);
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> ts;
    ts.reserve(dom.dim());
    const std::uint64_t dy = y.dim();
    for (std::size_t c = 0; c < dom.dim(); ++c) {
        std::uint64_t t = dom.slot_to_tuple(c);
        std::uint64_t xt = t / dy, yt = t % dy;
        std::size_t r = cod.tuple_to_slot(yt * x.dim() + xt);
        ts.emplace_back(r, c, x.ctx()->chi(x.tuple_degree(xt), y.tuple_degree(yt)));
    }
    return Mor::from_triplets(dom, cod, ts);
}

Mor braiding_inv(const Obj& x, const Obj& y) {
    if (x.ctx() != y.ctx()) throw GradingMismatch();
    Obj dom = y.tensor(x), cod = x.tensor(y);
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> ts;
    ts.reserve(dom.dim());
    const std::uint64_t dx = x.dim();
    for (std::size_t c = 0; c < dom.dim(); ++c) {
        std::uint64_t t = dom.slot_to_tuple(c);
        std::uint64_t yt = t / dx, xt = t % dx;
        std::size_t r = cod.tuple_to_slot(xt * y.dim() + yt);
        ts.emplace_back(r, c, x.ctx()->chi_inv(x.tuple_degree(xt), y.tuple_degree(yt)));
    }
    return Mor::from_triplets(dom, cod, ts);
}

bool mor_equal(const Mor& f, const Mor& g) {
    return f.dom().graded_equal(g.dom()) && f.cod().graded_equal(g.cod()) && f.mat().equal(g.mat());
}

std::optional<EqWitness> mor_diff(const Mor& f, const Mor& g) {
    if (!f.dom().graded_equal(g.dom()) || !f.cod().graded_equal(g.cod()))
        throw ShapeMismatch("comparison of morphisms with different shapes");
    for (std::size_t c = 0; c < f.mat().cols(); ++c)
        for (std::size_t r = 0; r < f.mat().rows(); ++r) {
            Scalar a = f.entry(r, c), b = g.entry(r, c);
            if (a != b) return EqWitness{r, c, a, b};
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// kernels, degreewise

std::pair<Obj, Mor> kernel(const Mor& f) {
    const Obj& dom = f.dom();
    const Obj& cod = f.cod();
    const FieldSpec fs = f.field();
    std::map<Deg, std::vector<std::size_t>> dom_slots, cod_slots;
    for (std::size_t s = 0; s < dom.dim(); ++s) dom_slots[dom.slot_degree(s)].push_back(s);
    for (std::size_t s = 0; s < cod.dim(); ++s) cod_slots[cod.slot_degree(s)].push_back(s);

    std::map<Deg, std::size_t> kdims;
    std::vector<std::pair<Deg, Mat>> bases;
    for (const auto& [d, ds] : dom_slots) {
        auto it = cod_slots.find(d);
        std::size_t nr = it == cod_slots.end() ? 0 : it->second.size();
        Mat block(fs, nr, ds.size());
        for (std::size_t c = 0; c < ds.size(); ++c)
            for (std::size_t r = 0; r < nr; ++r) block.set(r, c, f.entry(it->second[r], ds[c]));
        Mat basis = nr == 0 ? Mat::identity(fs, ds.size()) : null_space(block);
        if (basis.cols()) {
            kdims[d] = basis.cols();
            bases.emplace_back(d, std::move(basis));
        }
    }
    Obj K = Obj::atom(dom.ctx(), make_atom("ker", kdims));
    Mat jm(fs, dom.dim(), K.dim());
    std::size_t kcol = 0;
    for (const auto& [d, basis] : bases) {
        const auto& ds = dom_slots[d];
        for (std::size_t c = 0; c < basis.cols(); ++c, ++kcol)
            for (std::size_t r = 0; r < ds.size(); ++r) jm.set(ds[r], kcol, basis.get(r, c));
    }
    return {K, Mor(K, dom, std::move(jm), false)};
}

std::pair<Obj, Mor> cokernel(const Mor& f) {
    const Obj& dom = f.dom();
    const Obj& cod = f.cod();
    const FieldSpec fs = f.field();
    std::map<Deg, std::vector<std::size_t>> dom_slots, cod_slots;
    for (std::size_t s = 0; s < dom.dim(); ++s) dom_slots[dom.slot_degree(s)].push_back(s);
    for (std::size_t s = 0; s < cod.dim(); ++s) cod_slots[cod.slot_degree(s)].push_back(s);

    std::map<Deg, std::size_t> qdims;
    std::vector<std::pair<Deg, Mat>> bases;
    for (const auto& [d, cs] : cod_slots) {
        auto it = dom_slots.find(d);
        std::size_t nc = it == dom_slots.end() ? 0 : it->second.size();
        Mat block(fs, cs.size(), nc);
        for (std::size_t c = 0; c < nc; ++c)
            for (std::size_t r = 0; r < cs.size(); ++r) block.set(r, c, f.entry(cs[r], it->second[c]));
        Mat rows = nc == 0 ? Mat::identity(fs, cs.size()) : left_null_space(block);
        if (rows.rows()) {
            qdims[d] = rows.rows();
            bases.emplace_back(d, std::move(rows));
        }
    }
    Obj Q = Obj::atom(cod.ctx(), make_atom("coker", qdims));
    Mat pm(fs, Q.dim(), cod.dim());
    std::size_t qrow = 0;
    for (const auto& [d, rows] : bases) {
        const auto& cs = cod_slots[d];
        for (std::size_t r = 0; r < rows.rows(); ++r, ++qrow)
            for (std::size_t c = 0; c < cs.size(); ++c) pm.set(qrow, cs[c], rows.get(r, c));
    }
    return {Q, Mor(cod, Q, std::move(pm), false)};
}

// ---------------------------------------------------------------------------
// pipelines

unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HOPFFORGE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
}

namespace {

template <class Ops>
struct FactorMeta {
    std::uint64_t dom_dim = 1, cod_dim = 1;
    std::vector<std::vector<std::pair<std::uint64_t, typename Ops::T>>> cols;  // per dom tuple
};

template <class Ops>
struct StageMeta {
    std::vector<FactorMeta<Ops>> factors;
};

template <class Ops>
FactorMeta<Ops> factor_meta(const Ops& ops, const Mor& f) {
    FactorMeta<Ops> m;
    m.dom_dim = f.dom().dim();
    m.cod_dim = f.cod().dim();
    m.cols.resize(m.dom_dim);
    const auto& D = data_of<Ops>(f.mat());
    const std::size_t rows = f.mat().rows();
    for (std::uint64_t dt = 0; dt < m.dom_dim; ++dt) {
        std::size_t c = f.dom().tuple_to_slot(dt);
        for (std::size_t r = 0; r < rows; ++r) {
            const auto& v = D[c * rows + r];
            if (!ops.is_zero(v)) m.cols[dt].emplace_back(f.cod().slot_to_tuple(r), v);
        }
    }
    return m;
}

template <class Ops>
using Terms = std::vector<std::pair<std::uint64_t, typename Ops::T>>;

template <class Ops>
void merge_terms(const Ops& ops, Terms<Ops>& t) {
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < t.size();) {
        std::uint64_t key = t[i].first;
        auto acc = t[i].second;
        for (++i; i < t.size() && t[i].first == key; ++i) ops.add_assign(acc, t[i].second);
        if (!ops.is_zero(acc)) t[out++] = {key, std::move(acc)};
    }
    t.resize(out);
}

template <class Ops>
void apply_stage(const Ops& ops, const StageMeta<Ops>& st, const Terms<Ops>& in, Terms<Ops>& out) {
    out.clear();
    const std::size_t nf = st.factors.size();
    std::vector<std::uint64_t> comp(nf);
    std::vector<std::size_t> pick(nf);
    for (const auto& [tup, coeff] : in) {
        std::uint64_t rest = tup;
        for (std::size_t k = nf; k-- > 0;) {
            comp[k] = rest % st.factors[k].dom_dim;
            rest /= st.factors[k].dom_dim;
        }
        bool dead = false;
        for (std::size_t k = 0; k < nf && !dead; ++k) dead = st.factors[k].cols[comp[k]].empty();
        if (dead) continue;
        std::fill(pick.begin(), pick.end(), 0);
        bool more = true;
        while (more) {
            std::uint64_t otup = 0;
            auto c = coeff;
            for (std::size_t k = 0; k < nf; ++k) {
                const auto& e = st.factors[k].cols[comp[k]][pick[k]];
                otup = otup * st.factors[k].cod_dim + e.first;
                c = ops.mul(c, e.second);
            }
            out.emplace_back(otup, std::move(c));
            more = false;
            for (std::size_t k = nf; k-- > 0;) {
                if (++pick[k] < st.factors[k].cols[comp[k]].size()) {
                    more = true;
                    break;
                }
                pick[k] = 0;
            }
        }
    }
    merge_terms(ops, out);
}

template <class Ops>
std::vector<StageMeta<Ops>> build_stage_metas(const Ops& ops, const std::vector<Stage>& stages) {
    std::vector<StageMeta<Ops>> metas;
    metas.reserve(stages.size());
    for (const auto& st : stages) {
        StageMeta<Ops> sm;
        for (const auto& f : st.factors) sm.factors.push_back(factor_meta(ops, f));
        metas.push_back(std::move(sm));
    }
    return metas;
}

template <class Ops>
void eval_column(const Ops& ops, const std::vector<StageMeta<Ops>>& metas, std::uint64_t dom_tuple, Terms<Ops>& cur,
                 Terms<Ops>& buf) {
    cur.clear();
    cur.emplace_back(dom_tuple, ops.one());
    for (const auto& sm : metas) {
        apply_stage(ops, sm, cur, buf);
        std::swap(cur, buf);
    }
}

template <class F>
void run_columns(std::size_t n, F&& fn) {
    unsigned nw = worker_count();
    if (nw <= 1 || n < 64) {
        for (std::size_t c = 0; c < n; ++c) fn(c);
        return;
    }
    std::vector<std::thread> ths;
    std::size_t chunk = (n + nw - 1) / nw;
    for (unsigned w = 0; w < nw; ++w) {
        std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        ths.emplace_back([lo, hi, &fn] {
            for (std::size_t c = lo; c < hi; ++c) fn(c);
        });
    }
    for (auto& t : ths) t.join();
}

void check_stage_shapes(const Obj& dom, const std::vector<Stage>& stages, Obj* cod_out) {
    std::vector<AtomPtr> cur = dom.word();
    for (const auto& st : stages) {
        std::vector<AtomPtr> next;
        std::size_t pos = 0;
        for (const auto& f : st.factors) {
            if (f.ctx() != dom.ctx()) throw GradingMismatch();
            for (const auto& a : f.dom().word()) {
                if (pos >= cur.size()) throw ShapeMismatch("stage factors consume more strands than available");
                if (cur[pos] != a && cur[pos]->degs != a->degs)
                    throw ShapeMismatch("stage factor domain does not match incoming strands");
                ++pos;
            }
            for (const auto& a : f.cod().word()) next.push_back(a);
        }
        if (pos != cur.size()) throw ShapeMismatch("stage factors do not consume all strands");
        cur = std::move(next);
    }
    if (cod_out) *cod_out = Obj(dom.ctx(), std::move(cur));
}

}  // namespace

Pipe::Pipe(Obj dom, std::vector<Stage> stages) : dom_(std::move(dom)), stages_(std::move(stages)) {
    check_stage_shapes(dom_, stages_, &cod_);
}

Pipe::Pipe(Mor m) : dom_(m.dom()), cod_(m.cod()), stages_{Stage{std::move(m)}} {}

Mor tensor(const Mor& f, const Mor& g) { return Pipe(f.dom().tensor(g.dom()), {Stage{f, g}}).eval(); }

Mor Pipe::eval() const {
    const FieldSpec fs = dom_.ctx()->field();
    Mat out(fs, cod_.dim(), dom_.dim());
    dom_.slot_to_tuple(0);  // force table construction before threading
    cod_.tuple_to_slot(0);
    with_ops(fs, [&](auto ops) {
        using Ops = decltype(ops);
        auto metas = build_stage_metas(ops, stages_);
        auto& O = data_of_mut<Ops>(out);
        const std::size_t rows = cod_.dim();
        run_columns(dom_.dim(), [&](std::size_t c) {
            Terms<Ops> cur, buf;
            eval_column(ops, metas, dom_.slot_to_tuple(c), cur, buf);
            for (auto& [tup, v] : cur) O[c * rows + cod_.tuple_to_slot(tup)] = std::move(v);
        });
        return 0;
    });
    return Mor(dom_, cod_, std::move(out), false);
}

std::optional<EqWitness> pipe_diff(const Pipe& a, const Pipe& b) {
    if (!a.dom_.graded_equal(b.dom_) || !a.cod_.graded_equal(b.cod_))
        throw ShapeMismatch("pipelines compared across different shapes");
    const FieldSpec fs = a.dom_.ctx()->field();
    a.dom_.slot_to_tuple(0);
    a.cod_.tuple_to_slot(0);
    b.dom_.slot_to_tuple(0);
    b.cod_.tuple_to_slot(0);
    std::optional<EqWitness> found;
    std::mutex mtx;
    with_ops(fs, [&](auto ops) {
        using Ops = decltype(ops);
        auto ma = build_stage_metas(ops, a.stages_);
        auto mb = build_stage_metas(ops, b.stages_);
        run_columns(a.dom_.dim(), [&](std::size_t c) {
            {
                std::lock_guard<std::mutex> g(mtx);
                if (found && found->col <= c) return;
            }
            Terms<Ops> ta, tb, buf;
            eval_column(ops, ma, a.dom_.slot_to_tuple(c), ta, buf);
            eval_column(ops, mb, b.dom_.slot_to_tuple(c), tb, buf);
            for (auto& e : ta) e.first = a.cod_.tuple_to_slot(e.first);
            for (auto& e : tb) e.first = b.cod_.tuple_to_slot(e.first);
            auto bykey = [](const auto& x, const auto& y) { return x.first < y.first; };
            std::sort(ta.begin(), ta.end(), bykey);
            std::sort(tb.begin(), tb.end(), bykey);
            std::size_t i = 0, j = 0;
            while (i < ta.size() || j < tb.size()) {
                std::uint64_t ra = i < ta.size() ? ta[i].first : UINT64_MAX;
                std::uint64_t rb = j < tb.size() ? tb[j].first : UINT64_MAX;
                if (ra == rb && ops.is_zero(ops.sub(ta[i].second, tb[j].second))) {
                    ++i;
                    ++j;
                    continue;
                }
                std::size_t row;
                Scalar va = Scalar::zero(fs), vb = Scalar::zero(fs);
                if (ra < rb) {
                    row = ra;
                    va = boxed(fs, ta[i].second);
                } else if (rb < ra) {
                    row = rb;
                    vb = boxed(fs, tb[j].second);
                } else {
                    row = ra;
                    va = boxed(fs, ta[i].second);
                    vb = boxed(fs, tb[j].second);
                }
                std::lock_guard<std::mutex> g(mtx);
                if (!found || c < found->col || (c == found->col && row < found->row))
                    found = EqWitness{row, c, va, vb};
                return;
            }
        });
        return 0;
    });
    return found;
}

}  // namespace hopfforge
