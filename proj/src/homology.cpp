#include "bettilab/homology.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <unordered_set>

namespace bettilab {

namespace {

using boost::multiprecision::cpp_int;

bool small_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

FieldSpec FieldSpec::gf(long long p) {
    if (p >= (1LL << 31)) fail(Errc::InvalidField, "gf modulus must be below 2^31");
    if (!small_prime(p)) fail(Errc::InvalidField, std::to_string(p) + " is not prime");
    FieldSpec f;
    f.characteristic = p;
    return f;
}

std::string field_name(const FieldSpec& field) {
    return field.is_rational() ? "q" : "gf:" + std::to_string(field.characteristic);
}

FieldSpec parse_field(const std::string& text) {
    if (text == "q") return FieldSpec::rationals();
    if (text.rfind("gf:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos &&
            digits.size() <= 18)
            return FieldSpec::gf(std::stoll(digits));
    }
    fail(Errc::InvalidField, "field must be q or gf:P, got \"" + text + "\"");
}

namespace {

// Depth-first walk visiting exactly the faces (subsets of k.vertices with no
// minimal nonface inside). Extending a face F by v needs only the nonfaces
// through v: F+v is a face iff no such nonface e has e-v inside F.
template <typename Visit>
void for_each_face(const SimplicialComplexView& k, std::size_t max_faces, int max_card,
                   Visit&& visit) {
    std::vector<int> verts = set_to_vertices(k.vertices);
    std::vector<std::vector<VertexSet>> rest(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (VertexSet e : k.minimal_nonfaces)
            if (contains(e, verts[i])) rest[i].push_back(e & ~singleton(verts[i]));

    std::size_t count = 1;
    if (count > max_faces) fail(Errc::TooManyFaces, "face cap exceeded");
    visit(VertexSet(0));

    auto rec = [&](auto&& self, VertexSet f, std::size_t start, int card) -> void {
        if (max_card >= 0 && card >= max_card) return;
        for (std::size_t i = start; i < verts.size(); ++i) {
            bool face = true;
            for (VertexSet m : rest[i]) {
                if (is_subset(m, f)) {
                    face = false;
                    break;
                }
            }
            if (!face) continue;
            VertexSet f2 = f | singleton(verts[i]);
            if (++count > max_faces) fail(Errc::TooManyFaces, "face cap exceeded");
            visit(f2);
            self(self, f2, i + 1, card + 1);
        }
    };
    rec(rec, 0, 0, 0);
}

// layers[c] = faces of cardinality c, ascending mask order.
std::vector<std::vector<VertexSet>> face_layers(const SimplicialComplexView& k,
                                                std::size_t max_faces, int max_card) {
    std::vector<std::vector<VertexSet>> layers;
    for_each_face(k, max_faces, max_card, [&](VertexSet f) {
        int c = popcount(f);
        if (int(layers.size()) <= c) layers.resize(c + 1);
        layers[c].push_back(f);
    });
    for (auto& layer : layers) std::sort(layer.begin(), layer.end());
    return layers;
}

// Removes free pairs (F, G) where G is the unique face properly containing F;
// each removal is an elementary collapse, so homology is unchanged. Since the
// complex stays downward closed throughout, "unique proper coface" is
// equivalent to "unique coface one cardinality up". The empty face may be
// collapsed too: {∅,{v}} retracts to the void complex, which like a point has
// vanishing reduced homology everywhere.
void collapse_layers(std::vector<std::vector<VertexSet>>& layers, VertexSet vertices) {
    std::size_t total = 0;
    for (const auto& layer : layers) total += layer.size();
    if (total == 0) return;

    std::unordered_set<VertexSet> alive;
    alive.reserve(total * 2);
    std::vector<VertexSet> stack;
    stack.reserve(total);
    for (const auto& layer : layers)
        for (VertexSet f : layer) {
            alive.insert(f);
            stack.push_back(f);
        }

    std::vector<int> verts = set_to_vertices(vertices);
    while (!stack.empty()) {
        VertexSet f = stack.back();
        stack.pop_back();
        if (!alive.count(f)) continue;
        int cofaces = 0;
        VertexSet g = 0;
        for (int v : verts) {
            if (contains(f, v)) continue;
            VertexSet h = f | singleton(v);
            if (alive.count(h)) {
                if (++cofaces > 1) break;
                g = h;
            }
        }
        if (cofaces != 1) continue;
        alive.erase(f);
        alive.erase(g);
        for (int v : verts) {
            if (contains(f, v)) stack.push_back(f & ~singleton(v));
            if (contains(g, v)) stack.push_back(g & ~singleton(v));
        }
    }

    for (auto& layer : layers) layer.clear();
    for (VertexSet f : alive) {
        int c = popcount(f);
        layers[c].push_back(f);
    }
    while (!layers.empty() && layers.back().empty()) layers.pop_back();
    for (auto& layer : layers) std::sort(layer.begin(), layer.end());
}

// Boundary matrix from cardinality-c faces (columns) to (c-1)-faces (rows),
// standard alternating signs along each column's sorted vertex list.
std::vector<std::vector<std::int64_t>> boundary_matrix(const std::vector<VertexSet>& rows,
                                                       const std::vector<VertexSet>& cols) {
    std::vector<std::vector<std::int64_t>> m(rows.size(),
                                             std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<int> vs = set_to_vertices(cols[j]);
        std::int64_t sign = 1;
        for (int v : vs) {
            VertexSet sub = cols[j] & ~singleton(v);
            auto it = std::lower_bound(rows.begin(), rows.end(), sub);
            m[std::size_t(it - rows.begin())][j] = sign;
            sign = -sign;
        }
    }
    return m;
}

// Fraction-free (Bareiss) elimination with full pivoting; every intermediate
// entry is a minor of the input, so the division is exact. Returns nullopt
// when an entry leaves int64; caller escalates to arbitrary precision.
std::optional<int> rank_bareiss_i64(std::vector<std::vector<std::int64_t>>& a) {
    int rows = int(a.size());
    int cols = rows ? int(a[0].size()) : 0;
    std::int64_t prev = 1;
    int r = 0;
    while (r < rows && r < cols) {
        int pi = -1, pj = -1;
        std::int64_t best = 0;
        for (int i = r; i < rows; ++i) {
            for (int j = r; j < cols; ++j) {
                std::int64_t v = a[i][j] < 0 ? -a[i][j] : a[i][j];
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                    if (best == 1) break;
                }
            }
            if (best == 1) break;
        }
        if (pi < 0) break;
        std::swap(a[r], a[pi]);
        if (pj != r)
            for (int i = 0; i < rows; ++i) std::swap(a[i][r], a[i][pj]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = r + 1; j < cols; ++j) {
                __int128 num = (__int128)a[r][r] * a[i][j] - (__int128)a[i][r] * a[r][j];
                __int128 q = num / prev;
                if (q > INT64_MAX || q < INT64_MIN) return std::nullopt;
                a[i][j] = std::int64_t(q);
            }
            a[i][r] = 0;
        }
        prev = a[r][r];
        ++r;
    }
    return r;
}

int rank_bareiss_big(const std::vector<std::vector<std::int64_t>>& src) {
    int rows = int(src.size());
    int cols = rows ? int(src[0].size()) : 0;
    std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = src[i][j];
    cpp_int prev = 1;
    int r = 0;
    while (r < rows && r < cols) {
        int pi = -1, pj = -1;
        for (int i = r; i < rows && pi < 0; ++i)
            for (int j = r; j < cols; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        std::swap(a[r], a[pi]);
        if (pj != r)
            for (int i = 0; i < rows; ++i) std::swap(a[i][r], a[i][pj]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = r + 1; j < cols; ++j) a[i][j] = (a[r][r] * a[i][j] - a[i][r] * a[r][j]) / prev;
            a[i][r] = 0;
        }
        prev = a[r][r];
        ++r;
    }
    return r;
}

int rank_mod_p(std::vector<std::vector<std::int64_t>>& a, long long p) {
    int rows = int(a.size());
    int cols = rows ? int(a[0].size()) : 0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = ((a[i][j] % p) + p) % p;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pi = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                pi = i;
                break;
            }
        if (pi < 0) continue;
        std::swap(a[r], a[pi]);
        std::int64_t piv = a[r][c];
        for (int i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            std::int64_t fac = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] = ((a[i][j] * piv - fac * a[r][j]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

int matrix_rank(std::vector<std::vector<std::int64_t>> m, const FieldSpec& field) {
    if (m.empty() || m[0].empty()) return 0;
    if (!field.is_rational()) return rank_mod_p(m, field.characteristic);
    auto copy = m;
    if (auto r = rank_bareiss_i64(copy)) return *r;
    return rank_bareiss_big(m);
}

struct SparseOverflow {};

std::int64_t mulmod(std::int64_t a, std::int64_t b, long long p) {
    return std::int64_t((__int128)a * b % p);
}

std::int64_t invmod(std::int64_t a, long long p) {
    std::int64_t r = 1;
    for (long long e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
    }
    return r;
}

// Sparse elimination rank of the boundary from cardinality-c faces (columns)
// to (c-1)-faces (rows). Pivots are picked for least fill; over the rationals
// only +-1 entries pivot, which keeps every update division-free and exact in
// int64, any residue without a unit entry is finished by the dense path, and
// int64 overflow escalates the caller to the big-integer path. Over GF(p)
// every nonzero entry is a valid pivot and no residue remains.
int rank_sparse(const std::vector<VertexSet>& rows, const std::vector<VertexSet>& cols,
                const FieldSpec& field) {
    const long long p = field.is_rational() ? 0 : field.characteristic;
    const int nr = int(rows.size());
    const int nc = int(cols.size());
    std::vector<std::vector<std::pair<int, std::int64_t>>> col(nc);
    std::vector<std::vector<int>> row_cols(nr);
    std::vector<int> row_nnz(nr, 0);
    std::vector<char> col_alive(nc, 1);
    for (int j = 0; j < nc; ++j) {
        std::int64_t sign = 1;
        for (int v : set_to_vertices(cols[j])) {
            VertexSet sub = cols[j] & ~singleton(v);
            int r = int(std::lower_bound(rows.begin(), rows.end(), sub) - rows.begin());
            col[j].push_back({r, p != 0 && sign < 0 ? p - 1 : sign});
            row_cols[r].push_back(j);
            ++row_nnz[r];
            sign = -sign;
        }
        std::sort(col[j].begin(), col[j].end());
    }

    std::vector<int> col_stamp(nc, -1);
    int rank = 0;
    for (int step = 0;; ++step) {
        int pi = -1, pj = -1;
        std::int64_t piv = 0;
        long long best = -1;
        for (int j = 0; j < nc && best != 0; ++j) {
            if (!col_alive[j] || col[j].empty()) continue;
            const long long col_fill = (long long)col[j].size() - 1;
            for (const auto& e : col[j]) {
                if (p == 0 && e.second != 1 && e.second != -1) continue;
                const long long score = (long long)(row_nnz[e.first] - 1) * col_fill;
                if (best < 0 || score < best) {
                    best = score;
                    pi = e.first;
                    pj = j;
                    piv = e.second;
                    if (score == 0) break;
                }
            }
        }
        if (pj < 0) break;
        ++rank;
        auto pivot_col = std::move(col[pj]);
        col[pj].clear();
        col_alive[pj] = 0;
        for (const auto& e : pivot_col) --row_nnz[e.first];
        const std::int64_t inv = p != 0 ? invmod(piv, p) : piv;
        for (int k : row_cols[pi]) {
            if (!col_alive[k] || col_stamp[k] == step) continue;
            col_stamp[k] = step;
            auto it = std::lower_bound(col[k].begin(), col[k].end(),
                                       std::pair<int, std::int64_t>{pi, INT64_MIN});
            if (it == col[k].end() || it->first != pi) continue;
            const __int128 s =
                p != 0 ? (__int128)mulmod(it->second, inv, p) : (__int128)it->second * piv;
            std::vector<std::pair<int, std::int64_t>> merged;
            merged.reserve(col[k].size() + pivot_col.size());
            auto narrow = [&](__int128 t) -> std::int64_t {
                if (p != 0) return std::int64_t(((t % p) + p) % p);
                if (t > INT64_MAX || t < INT64_MIN) throw SparseOverflow{};
                return std::int64_t(t);
            };
            auto ia = col[k].begin(), ea = col[k].end();
            auto ib = pivot_col.begin(), eb = pivot_col.end();
            while (ia != ea || ib != eb) {
                if (ib == eb || (ia != ea && ia->first < ib->first)) {
                    merged.push_back(*ia++);
                    continue;
                }
                if (ia == ea || ib->first < ia->first) {
                    std::int64_t nv = narrow(-s * ib->second);
                    if (nv != 0) {
                        merged.push_back({ib->first, nv});
                        ++row_nnz[ib->first];
                        row_cols[ib->first].push_back(k);
                    }
                    ++ib;
                    continue;
                }
                std::int64_t nv = narrow((__int128)ia->second - s * ib->second);
                if (nv != 0)
                    merged.push_back({ia->first, nv});
                else
                    --row_nnz[ia->first];
                ++ia;
                ++ib;
            }
            col[k] = std::move(merged);
        }
        row_cols[pi].clear();
    }
    if (p != 0) return rank;

    std::vector<int> rmap(nr, -1);
    int residue_rows = 0, residue_cols = 0;
    for (int j = 0; j < nc; ++j) {
        if (!col_alive[j] || col[j].empty()) continue;
        ++residue_cols;
        for (const auto& e : col[j])
            if (rmap[e.first] < 0) rmap[e.first] = residue_rows++;
    }
    if (residue_cols == 0) return rank;
    std::vector<std::vector<std::int64_t>> dense(residue_rows,
                                                 std::vector<std::int64_t>(residue_cols, 0));
    int jj = 0;
    for (int j = 0; j < nc; ++j) {
        if (!col_alive[j] || col[j].empty()) continue;
        for (const auto& e : col[j]) dense[std::size_t(rmap[e.first])][std::size_t(jj)] = e.second;
        ++jj;
    }
    return rank + matrix_rank(std::move(dense), field);
}

int boundary_rank(const std::vector<VertexSet>& rows, const std::vector<VertexSet>& cols,
                  const FieldSpec& field) {
    if (rows.empty() || cols.empty()) return 0;
    try {
        return rank_sparse(rows, cols, field);
    } catch (const SparseOverflow&) {
        return rank_bareiss_big(boundary_matrix(rows, cols));
    }
}

HomologyProfile profile_from_layers(const std::vector<std::vector<VertexSet>>& layers,
                                    const FieldSpec& field) {
    HomologyProfile out;
    if (layers.empty()) return out;
    int kmax = int(layers.size()) - 1;
    // ranks[c] = rank of the boundary from cardinality c to c-1
    std::vector<int> ranks(kmax + 3, 0);
    for (int c = 1; c <= kmax; ++c) ranks[c] = boundary_rank(layers[c - 1], layers[c], field);
    for (int p = -1; p < kmax; ++p) {
        std::int64_t b = std::int64_t(layers[p + 1].size()) - ranks[p + 1] - ranks[p + 2];
        if (b != 0) out[p] = b;
    }
    return out;
}

} // namespace

HomologyProfile reduced_betti_all(const SimplicialComplexView& k, const FieldSpec& field,
                                  const HomologyOptions& opts) {
    auto layers = face_layers(k, opts.max_faces, -1);
    if (opts.collapse) collapse_layers(layers, k.vertices);
    return profile_from_layers(layers, field);
}

std::int64_t reduced_betti(const SimplicialComplexView& k, int p, const FieldSpec& field,
                           const HomologyOptions& opts) {
    if (p < -1) return 0;
    auto layers = face_layers(k, opts.max_faces, p + 2);
    auto layer = [&](int c) -> const std::vector<VertexSet>& {
        static const std::vector<VertexSet> empty;
        return (c >= 0 && c < int(layers.size())) ? layers[c] : empty;
    };
    if (layer(p + 1).empty()) return 0;
    int r1 = p >= 0 ? boundary_rank(layer(p), layer(p + 1), field) : 0;
    int r2 = boundary_rank(layer(p + 1), layer(p + 2), field);
    return std::int64_t(layer(p + 1).size()) - r1 - r2;
}

std::optional<int> is_cone(const SimplicialComplexView& k) {
    for (int v : set_to_vertices(k.vertices)) {
        bool hit = false;
        for (VertexSet e : k.minimal_nonfaces) {
            if (contains(e, v)) {
                hit = true;
                break;
            }
        }
        if (!hit) return v;
    }
    return std::nullopt;
}

std::int64_t reduced_euler(const SimplicialComplexView& k, const HomologyOptions& opts) {
    std::int64_t chi = 0;
    for_each_face(k, opts.max_faces, -1,
                  [&](VertexSet f) { chi += (popcount(f) % 2 == 0) ? -1 : 1; });
    return chi;
}

} // namespace bettilab
