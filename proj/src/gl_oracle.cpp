#include "packets/gl_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>

namespace packets::gl {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

int primitive_root(int q) {
    if (q == 2) return 1;
    for (int cand = 2; cand < q; ++cand) {
        int x = cand % q, ord = 1;
        while (x != 1) {
            x = x * cand % q;
            ++ord;
        }
        if (ord == q - 1) return cand;
    }
    throw InternalError("no primitive root mod " + std::to_string(q));
}

// e(t) = exp(2 pi i t)
std::complex<double> unit_root(double t) {
    return std::polar(1.0, 2.0 * std::numbers::pi * t);
}

// Determinant over F_q by Gaussian elimination; returns 0 for singular.
int det_mod(const Mat& m, int q) {
    int n = m.n;
    int w[4][4];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = m.at(i, j);
    long det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (w[row][col] % q != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(w[pivot][j], w[col][j]);
            det = -det;
        }
        int pv = w[col][col] % q;
        det = det * pv % q;
        // pv^{-1} mod q by Fermat
        int inv = 1;
        for (int e = 0; e < q - 2; ++e) inv = inv * pv % q;
        for (int row = col + 1; row < n; ++row) {
            int factor = w[row][col] * inv % q;
            if (factor == 0) continue;
            for (int j = col; j < n; ++j)
                w[row][j] = ((w[row][j] - factor * w[col][j]) % q + q * q) % q;
        }
    }
    return static_cast<int>(((det % q) + q) % q);
}

} // namespace

long FiniteGl::order_formula(int n, int q) {
    long order = 1;
    long qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    long qi = 1;
    for (int i = 0; i < n; ++i) {
        order *= (qn - qi);
        qi *= q;
    }
    return order;
}

const FiniteGl& FiniteGl::get(int n, int q) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<const FiniteGl>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find({n, q});
    if (it == registry.end()) {
        it = registry.emplace(std::make_pair(n, q),
                              std::unique_ptr<const FiniteGl>(new FiniteGl(n, q))).first;
    }
    return *it->second;
}

FiniteGl::FiniteGl(int n, int q) : n_(n), q_(q) {
    if (n < 1 || n > 4) throw ParameterError("group rank must be 1..4, got " + std::to_string(n));
    if (!is_prime(q)) throw ParameterError("oracle groups need prime q, got " + std::to_string(q));
    if (order_formula(n, q) > max_order)
        throw ResourceError("|GL_" + std::to_string(n) + "(F_" + std::to_string(q) + ")| = " +
                            std::to_string(order_formula(n, q)) + " exceeds the bound " +
                            std::to_string(max_order));

    int root = primitive_root(q);
    unit_dlog_.assign(q, 0);
    int x = 1;
    for (int e = 0; e < q - 1; ++e) {
        unit_dlog_[x] = e;
        x = x * root % q;
    }

    enumerate_elements();

    // Generators: all elementary transvections E_ij(1) plus, when the unit
    // group is nontrivial, diag(root, 1, ..., 1). Row reduction shows these
    // generate, and build_classes double-checks by closing them up.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Mat t = identity();
            t.set(i, j, 1);
            generators_.push_back(t);
        }
    if (q > 2) {
        Mat d = identity();
        d.set(0, 0, root);
        generators_.push_back(d);
    }

    build_classes();
}

long FiniteGl::code_of(const Mat& g) const {
    long code = 0;
    for (int i = n_ * n_ - 1; i >= 0; --i) code = code * q_ + g.a[i];
    return code;
}

void FiniteGl::enumerate_elements() {
    const int entries = n_ * n_;
    long total = 1;
    for (int i = 0; i < entries; ++i) total *= q_;

    code_to_index_.assign(total, -1);
    for (long code = 0; code < total; ++code) {
        Mat m;
        m.n = static_cast<std::uint8_t>(n_);
        long c = code;
        for (int i = 0; i < entries; ++i) {
            m.a[i] = static_cast<std::uint8_t>(c % q_);
            c /= q_;
        }
        if (det_mod(m, q_) == 0) continue;
        code_to_index_[code] = static_cast<long>(elements_.size());
        elements_.push_back(m);
    }
    if (static_cast<long>(elements_.size()) != order_formula(n_, q_))
        throw InternalError("element enumeration does not match the group order");

    inverse_.assign(elements_.size(), -1);
    for (long i = 0; i < static_cast<long>(elements_.size()); ++i) {
        if (inverse_[i] != -1) continue;
        // brute scan is avoided: invert by power (finite order) — multiply
        // until identity reappears, the previous power is the inverse.
        Mat acc = elements_[i];
        Mat prev = identity();
        while (!(acc == identity())) {
            prev = acc;
            acc = mul(acc, elements_[i]);
        }
        long inv = index_of(prev);
        inverse_[i] = inv;
        inverse_[inv] = i;
    }
}

void FiniteGl::build_classes() {
    // Closure check: the generator set must reproduce the whole group.
    {
        std::vector<char> seen(elements_.size(), 0);
        std::vector<long> queue;
        long id = index_of(identity());
        seen[id] = 1;
        queue.push_back(id);
        std::vector<long> gen_idx;
        for (const Mat& g : generators_) gen_idx.push_back(index_of(g));
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Mat& cur = elements_[queue[head]];
            for (long gi : gen_idx) {
                long next = index_of(mul(cur, elements_[gi]));
                if (!seen[next]) {
                    seen[next] = 1;
                    queue.push_back(next);
                }
            }
        }
        if (queue.size() != elements_.size())
            throw InternalError("generator set does not generate GL_" + std::to_string(n_) +
                                "(F_" + std::to_string(q_) + ")");
    }

    // Orbit partitioning under conjugation by the generators: since they
    // generate the group, each orbit is a full conjugacy class.
    class_of_.assign(elements_.size(), -1);
    std::vector<std::pair<long, long>> gens; // (gen index, inverse index)
    for (const Mat& g : generators_) {
        long gi = index_of(g);
        gens.emplace_back(gi, inverse_[gi]);
    }
    for (long e = 0; e < static_cast<long>(elements_.size()); ++e) {
        if (class_of_[e] != -1) continue;
        int cls = static_cast<int>(class_rep_.size());
        class_rep_.push_back(e);
        class_of_[e] = cls;
        std::vector<long> queue{e};
        long size = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Mat& cur = elements_[queue[head]];
            for (const auto& [gi, gin] : gens) {
                Mat conj = mul(mul(elements_[gi], cur), elements_[gin]);
                long ci = index_of(conj);
                if (class_of_[ci] == -1) {
                    class_of_[ci] = cls;
                    queue.push_back(ci);
                    ++size;
                }
            }
        }
        class_size_.push_back(size);
    }
    long covered = 0;
    for (long s : class_size_) covered += s;
    if (covered != order()) throw InternalError("conjugacy classes do not partition the group");
}

long FiniteGl::index_of(const Mat& g) const {
    long idx = code_to_index_[code_of(g)];
    if (idx < 0) throw ParameterError("matrix is not an element of this group");
    return idx;
}

Mat FiniteGl::identity() const {
    Mat m;
    m.n = static_cast<std::uint8_t>(n_);
    for (int i = 0; i < n_; ++i) m.set(i, i, 1);
    return m;
}

Mat FiniteGl::mul(const Mat& x, const Mat& y) const {
    Mat r;
    r.n = static_cast<std::uint8_t>(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            int acc = 0;
            for (int k = 0; k < n_; ++k) acc += x.at(i, k) * y.at(k, j);
            r.set(i, j, acc % q_);
        }
    return r;
}

ClassFunction trivial_character(const FiniteGl& G) {
    ClassFunction f;
    f.group = &G;
    f.values.assign(G.class_count(), std::complex<double>(1.0, 0.0));
    return f;
}

namespace {

void require_same_group(const ClassFunction& a, const ClassFunction& b) {
    if (a.group == nullptr || a.group != b.group)
        throw ParameterError("class functions live on different groups");
}

} // namespace

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b) {
    require_same_group(a, b);
    ClassFunction r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
    return r;
}

ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b) {
    require_same_group(a, b);
    ClassFunction r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] -= b.values[i];
    return r;
}

double max_abs_difference(const ClassFunction& a, const ClassFunction& b) {
    require_same_group(a, b);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
    return worst;
}

std::complex<double> inner_product(const ClassFunction& a, const ClassFunction& b) {
    require_same_group(a, b);
    std::complex<double> acc(0.0, 0.0);
    for (int c = 0; c < a.group->class_count(); ++c)
        acc += static_cast<double>(a.group->class_size(c)) * a.values[c] * std::conj(b.values[c]);
    return acc / static_cast<double>(a.group->order());
}

long integer_gate(std::complex<double> v, double tol) {
    double rounded = std::round(v.real());
    if (std::abs(v.real() - rounded) > tol || std::abs(v.imag()) > tol)
        throw NumericalIntegrityError("value " + std::to_string(v.real()) + "+" +
                                      std::to_string(v.imag()) + "i fails the integrality gate");
    return static_cast<long>(rounded);
}

ClassFunction induced_character(const FiniteGl& G, const std::vector<int>& exponents) {
    std::vector<ParabolicBlock> blocks;
    if (static_cast<int>(exponents.size()) != G.n())
        throw ParameterError("need one torus character exponent per row");
    const FiniteGl& gl1 = FiniteGl::get(1, G.q());
    for (int e : exponents) {
        ParabolicBlock b;
        b.size = 1;
        ClassFunction chi;
        chi.group = &gl1;
        chi.values.resize(gl1.class_count());
        int mod = G.q() - 1;
        int ee = ((e % mod) + mod) % mod;
        for (int c = 0; c < gl1.class_count(); ++c) {
            int u = gl1.class_rep(c).at(0, 0);
            chi.values[c] = unit_root(static_cast<double>(ee) * gl1.unit_dlog(u) / mod);
        }
        b.chi = std::move(chi);
        blocks.push_back(std::move(b));
    }
    return parabolic_induced_character(G, blocks);
}

ClassFunction gelfand_graev_character(const FiniteGl& G, int psi0_exponent) {
    const int n = G.n(), q = G.q();
    if (psi0_exponent % q == 0)
        throw PreconditionError("the additive character psi_0 must be nontrivial");

    long n_order = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) n_order *= q;

    ClassFunction out;
    out.group = &G;
    out.values.assign(G.class_count(), {0.0, 0.0});
    for (int c = 0; c < G.class_count(); ++c) {
        const Mat& g = G.class_rep(c);
        std::complex<double> acc(0.0, 0.0);
        for (long xi = 0; xi < G.order(); ++xi) {
            const Mat& x = G.elements()[xi];
            Mat t = G.mul(G.mul(x, g), G.elements()[G.inverse_index(xi)]);
            bool unitriangular = true;
            for (int i = 0; i < n && unitriangular; ++i) {
                if (t.at(i, i) != 1) unitriangular = false;
                for (int j = 0; j < i; ++j)
                    if (t.at(i, j) != 0) unitriangular = false;
            }
            if (!unitriangular) continue;
            int s = 0;
            for (int i = 0; i + 1 < n; ++i) s = (s + t.at(i, i + 1)) % q;
            acc += unit_root(static_cast<double>(psi0_exponent % q) * s / q);
        }
        out.values[c] = acc / static_cast<double>(n_order);
    }
    return out;
}

ClassFunction parabolic_induced_character(const FiniteGl& G,
                                          const std::vector<ParabolicBlock>& blocks) {
    int total = 0;
    for (const ParabolicBlock& b : blocks) {
        if (b.size < 1) throw ParameterError("parabolic block sizes must be positive");
        if (b.chi.group == nullptr || b.chi.group->n() != b.size || b.chi.group->q() != G.q())
            throw ParameterError("parabolic block character lives on the wrong group");
        total += b.size;
    }
    if (total != G.n()) throw ParameterError("parabolic block sizes must sum to n");

    const int n = G.n(), q = G.q();
    std::vector<int> block_of(n), block_start(blocks.size());
    {
        int row = 0;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            block_start[b] = row;
            for (int i = 0; i < blocks[b].size; ++i) block_of[row++] = static_cast<int>(b);
        }
    }

    long parabolic_order = 1;
    {
        // one free entry per cell strictly above the block diagonal
        int radical_cells = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (block_of[i] < block_of[j]) ++radical_cells;
        for (int i = 0; i < radical_cells; ++i) parabolic_order *= q;
        for (const ParabolicBlock& b : blocks) parabolic_order *= FiniteGl::order_formula(b.size, q);
    }

    ClassFunction out;
    out.group = &G;
    out.values.assign(G.class_count(), {0.0, 0.0});
    for (int c = 0; c < G.class_count(); ++c) {
        const Mat& g = G.class_rep(c);
        std::complex<double> acc(0.0, 0.0);
        for (long xi = 0; xi < G.order(); ++xi) {
            const Mat& x = G.elements()[xi];
            Mat t = G.mul(G.mul(x, g), G.elements()[G.inverse_index(xi)]);
            bool member = true;
            for (int i = 0; i < n && member; ++i)
                for (int j = 0; j < n; ++j)
                    if (block_of[i] > block_of[j] && t.at(i, j) != 0) {
                        member = false;
                        break;
                    }
            if (!member) continue;
            std::complex<double> val(1.0, 0.0);
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                Mat sub;
                sub.n = static_cast<std::uint8_t>(blocks[b].size);
                for (int i = 0; i < blocks[b].size; ++i)
                    for (int j = 0; j < blocks[b].size; ++j)
                        sub.set(i, j, t.at(block_start[b] + i, block_start[b] + j));
                val *= blocks[b].chi.at(sub);
            }
            acc += val;
        }
        out.values[c] = acc / static_cast<double>(parabolic_order);
    }
    return out;
}

Mat embed_corner(const FiniteGl& big, const Mat& small_g) {
    if (small_g.n + 1 != big.n())
        throw ParameterError("embed_corner: size mismatch");
    Mat m;
    m.n = static_cast<std::uint8_t>(big.n());
    for (int i = 0; i < small_g.n; ++i)
        for (int j = 0; j < small_g.n; ++j) m.set(i, j, small_g.at(i, j));
    m.set(big.n() - 1, big.n() - 1, 1);
    return m;
}

ClassFunction restrict_character(const ClassFunction& chi_big, const FiniteGl& small) {
    const FiniteGl& big = *chi_big.group;
    if (small.n() + 1 != big.n() || small.q() != big.q())
        throw ParameterError("restrict_character: GL_{n-1} corner expected");
    ClassFunction out;
    out.group = &small;
    out.values.resize(small.class_count());
    for (int c = 0; c < small.class_count(); ++c)
        out.values[c] = chi_big.at(embed_corner(big, small.class_rep(c)));
    return out;
}

long hom_dimension(const ClassFunction& chi_big, const ClassFunction& chi_small) {
    if (chi_big.group == nullptr || chi_small.group == nullptr)
        throw ParameterError("hom_dimension: unbound class function");
    ClassFunction restricted = restrict_character(chi_big, *chi_small.group);
    long dim = integer_gate(inner_product(restricted, chi_small));
    if (dim < 0)
        throw NumericalIntegrityError("negative Hom dimension " + std::to_string(dim));
    return dim;
}

long twisted_jacquet_dimension(const ClassFunction& chi, int i, int psi0_exponent) {
    const FiniteGl& G = *chi.group;
    const int n = G.n(), q = G.q();
    if (i < 0 || i > n) throw ParameterError("derivative order out of range");
    if (psi0_exponent % q == 0)
        throw PreconditionError("the additive character psi_0 must be nontrivial");

    // Free entries of V_i: the (n-i) x i block v and the strict upper
    // triangle of the unitriangular i x i block z.
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < n - i; ++r)
        for (int c = n - i; c < n; ++c) cells.emplace_back(r, c);
    for (int r = n - i; r < n; ++r)
        for (int c = r + 1; c < n; ++c) cells.emplace_back(r, c);

    long v_order = 1;
    for (std::size_t k = 0; k < cells.size(); ++k) v_order *= q;

    std::complex<double> acc(0.0, 0.0);
    for (long code = 0; code < v_order; ++code) {
        Mat u;
        u.n = static_cast<std::uint8_t>(n);
        for (int d = 0; d < n; ++d) u.set(d, d, 1);
        long cc = code;
        for (std::size_t k = 0; k < cells.size(); ++k) {
            u.set(cells[k].first, cells[k].second, static_cast<int>(cc % q));
            cc /= q;
        }
        int s = 0;
        for (int r = n - i; r + 1 < n; ++r) s = (s + u.at(r, r + 1)) % q;
        std::complex<double> psi = unit_root(static_cast<double>(psi0_exponent % q) * s / q);
        acc += chi.at(u) * std::conj(psi);
    }
    return integer_gate(acc / static_cast<double>(v_order));
}

} // namespace packets::gl
