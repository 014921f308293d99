#include "icgraph/persistence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace icgraph {

bool operator==(const DiagramPoint& a, const DiagramPoint& b) {
    return a.birth == b.birth && a.death == b.death;
}

std::vector<DiagramPoint> PersistenceDiagram::points(int dim) const {
    if (dim < 0 || dim > 1) throw std::out_of_range("diagram dimension must be 0 or 1");
    std::vector<DiagramPoint> pts = by_dim[static_cast<std::size_t>(dim)];
    std::sort(pts.begin(), pts.end(), [](const DiagramPoint& a, const DiagramPoint& b) {
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
    return pts;
}

namespace {

using Column = std::vector<std::int32_t>;

std::uint64_t pair_key(VertexIndex a, VertexIndex b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

std::string simplex_str(const Simplex& s) {
    std::ostringstream out;
    out << '(';
    for (int i = 0; i <= s.dim; ++i) out << (i ? "," : "") << s.v[i];
    out << ')';
    return out.str();
}

// xor-merge of sorted index vectors
void add_column(Column& target, const Column& other, Column& scratch) {
    scratch.clear();
    std::set_symmetric_difference(target.begin(), target.end(), other.begin(), other.end(),
                                  std::back_inserter(scratch));
    target.swap(scratch);
}

struct BoundaryMatrix {
    std::vector<Column> columns;
    std::vector<std::int8_t> dims;
    std::vector<double> values;
};

// Boundary columns in filtration order; throws on non-monotone input.
BoundaryMatrix build_matrix(const FilteredComplex& fc) {
    const auto n = fc.simplices.size();
    BoundaryMatrix m;
    m.columns.resize(n);
    m.dims.resize(n);
    m.values.resize(n);

    std::vector<std::int32_t> vertex_pos(fc.vertex_count, -1);
    std::unordered_map<std::uint64_t, std::int32_t> edge_pos;
    edge_pos.reserve(n);

    double prev_value = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
        const Simplex& s = fc.simplices[j];
        if (s.value < prev_value)
            throw GraphError("filtration not sorted at simplex " + simplex_str(s));
        prev_value = s.value;
        m.dims[j] = s.dim;
        m.values[j] = s.value;

        const auto require_face = [&](std::int32_t pos, const char* what) {
            if (pos < 0 || fc.simplices[static_cast<std::size_t>(pos)].value > s.value) {
                throw GraphError(std::string("non-monotone filtration: ") + what +
                                 " missing or later than coface " + simplex_str(s));
            }
            m.columns[j].push_back(pos);
        };

        switch (s.dim) {
            case 0:
                vertex_pos[s.v[0]] = static_cast<std::int32_t>(j);
                break;
            case 1: {
                require_face(vertex_pos[s.v[0]], "endpoint");
                require_face(vertex_pos[s.v[1]], "endpoint");
                edge_pos[pair_key(s.v[0], s.v[1])] = static_cast<std::int32_t>(j);
                break;
            }
            case 2: {
                const auto find_edge = [&](VertexIndex a, VertexIndex b) {
                    auto it = edge_pos.find(pair_key(a, b));
                    return it == edge_pos.end() ? -1 : it->second;
                };
                require_face(find_edge(s.v[0], s.v[1]), "edge");
                require_face(find_edge(s.v[0], s.v[2]), "edge");
                require_face(find_edge(s.v[1], s.v[2]), "edge");
                break;
            }
            default:
                throw GraphError("unsupported simplex dimension");
        }
        std::sort(m.columns[j].begin(), m.columns[j].end());
    }
    return m;
}

}  // namespace

ReductionResult reduce_full(const FilteredComplex& fc, ReductionOptions opts) {
    BoundaryMatrix m = build_matrix(fc);
    const std::size_t n = m.columns.size();

    std::vector<std::int32_t> low_to_col(n, -1);
    std::vector<std::int32_t> paired_with(n, -1);  // creator pos -> destroyer pos
    std::vector<char> is_destroyer(n, 0);
    std::vector<char> cleared(n, 0);
    Column scratch;

    const auto reduce_column = [&](std::size_t j) {
        Column& col = m.columns[j];
        while (!col.empty()) {
            const std::int32_t low = col.back();
            const std::int32_t other = low_to_col[static_cast<std::size_t>(low)];
            if (other < 0) {
                low_to_col[static_cast<std::size_t>(low)] = static_cast<std::int32_t>(j);
                paired_with[static_cast<std::size_t>(low)] = static_cast<std::int32_t>(j);
                is_destroyer[j] = 1;
                return;
            }
            add_column(col, m.columns[static_cast<std::size_t>(other)], scratch);
        }
    };

    if (opts.clearing) {
        // Top dimension first; pivots identify lower-dimension columns that
        // would reduce to zero, so they are skipped outright.
        for (int dim = 2; dim >= 1; --dim) {
            for (std::size_t j = 0; j < n; ++j) {
                if (m.dims[j] != dim || cleared[j]) continue;
                reduce_column(j);
                if (is_destroyer[j]) cleared[static_cast<std::size_t>(m.columns[j].back())] = 1;
            }
        }
    } else {
        for (std::size_t j = 0; j < n; ++j)
            if (m.dims[j] >= 1) reduce_column(j);
    }

    ReductionResult result;
    result.simplex_count = n;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_destroyer[j]) continue;
        const int dim = m.dims[j];
        const std::int32_t destroyer = paired_with[j];
        if (destroyer >= 0) {
            const double birth = m.values[j];
            const double death = m.values[static_cast<std::size_t>(destroyer)];
            result.raw_pairs.push_back(RawPair{dim, birth, death});
            ++result.finite_pair_count;
            if (death > birth)
                result.diagram.by_dim[static_cast<std::size_t>(dim)].push_back(
                    DiagramPoint{birth, death});
        } else {
            const double inf = std::numeric_limits<double>::infinity();
            result.raw_pairs.push_back(RawPair{dim, m.values[j], inf});
            ++result.infinite_count;
            result.diagram.by_dim[static_cast<std::size_t>(dim)].push_back(
                DiagramPoint{m.values[j], inf});
        }
    }

    if (result.simplex_count != 2 * result.finite_pair_count + result.infinite_count)
        throw std::logic_error("persistence pairing conservation violated");
    return result;
}

PersistenceDiagram reduce(const FilteredComplex& fc, ReductionOptions opts) {
    return reduce_full(fc, opts).diagram;
}

namespace {

double cheb(const DiagramPoint& a, const DiagramPoint& b) {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double half_persistence(const DiagramPoint& p) { return (p.death - p.birth) / 2.0; }

// Perfect-matching feasibility at cost threshold c for the finite parts,
// via augmenting paths on the standard points-plus-projections graph.
struct FiniteMatcher {
    const std::vector<DiagramPoint>& a;
    const std::vector<DiagramPoint>& b;
    std::size_t n1, n2;
    std::vector<int> right_match;  // right node -> left node
    std::vector<int> left_match;   // left node -> right node

    FiniteMatcher(const std::vector<DiagramPoint>& a_, const std::vector<DiagramPoint>& b_)
        : a(a_), b(b_), n1(a_.size()), n2(b_.size()) {}

    bool edge(std::size_t left, std::size_t right, double c) const {
        if (left < n1) {
            if (right < n2) return cheb(a[left], b[right]) <= c;
            return right - n2 == left && half_persistence(a[left]) <= c;
        }
        const std::size_t j = left - n1;
        if (right < n2) return right == j && half_persistence(b[j]) <= c;
        return true;  // diagonal to diagonal
    }

    bool try_augment(std::size_t left, double c, std::vector<char>& visited) {
        for (std::size_t right = 0; right < n1 + n2; ++right) {
            if (visited[right] || !edge(left, right, c)) continue;
            visited[right] = 1;
            if (right_match[right] < 0 ||
                try_augment(static_cast<std::size_t>(right_match[right]), c, visited)) {
                right_match[right] = static_cast<int>(left);
                left_match[left] = static_cast<int>(right);
                return true;
            }
        }
        return false;
    }

    bool feasible(double c) {
        right_match.assign(n1 + n2, -1);
        left_match.assign(n1 + n2, -1);
        for (std::size_t left = 0; left < n1 + n2; ++left) {
            std::vector<char> visited(n1 + n2, 0);
            if (!try_augment(left, c, visited)) return false;
        }
        return true;
    }
};

}  // namespace

BottleneckMatching bottleneck_matching(const std::vector<DiagramPoint>& a,
                                       const std::vector<DiagramPoint>& b) {
    BottleneckMatching out;
    out.a_match.assign(a.size(), -1);
    out.b_match.assign(b.size(), -1);

    std::vector<std::size_t> a_inf, b_inf, a_fin, b_fin;
    for (std::size_t i = 0; i < a.size(); ++i)
        (a[i].infinite() ? a_inf : a_fin).push_back(i);
    for (std::size_t j = 0; j < b.size(); ++j)
        (b[j].infinite() ? b_inf : b_fin).push_back(j);

    if (a_inf.size() != b_inf.size()) {
        out.value = std::numeric_limits<double>::infinity();
        for (std::size_t i : a_inf) out.a_match[i] = -2;
        for (std::size_t j : b_inf) out.b_match[j] = -2;
        return out;
    }

    // Essential classes pair among themselves; sorted birth order is optimal
    // for the max metric on a line.
    double inf_value = 0.0;
    auto by_birth = [&](const std::vector<DiagramPoint>& pts) {
        return [&pts](std::size_t x, std::size_t y) { return pts[x].birth < pts[y].birth; };
    };
    std::sort(a_inf.begin(), a_inf.end(), by_birth(a));
    std::sort(b_inf.begin(), b_inf.end(), by_birth(b));
    for (std::size_t k = 0; k < a_inf.size(); ++k) {
        out.a_match[a_inf[k]] = static_cast<int>(b_inf[k]);
        out.b_match[b_inf[k]] = static_cast<int>(a_inf[k]);
        inf_value = std::max(inf_value, std::abs(a[a_inf[k]].birth - b[b_inf[k]].birth));
    }

    std::vector<DiagramPoint> fa, fb;
    for (std::size_t i : a_fin) fa.push_back(a[i]);
    for (std::size_t j : b_fin) fb.push_back(b[j]);

    // Candidate costs: every point-to-point distance and every diagonal
    // projection cost; binary search for the smallest feasible one.
    std::vector<double> candidates{0.0};
    for (const DiagramPoint& p : fa) candidates.push_back(half_persistence(p));
    for (const DiagramPoint& q : fb) candidates.push_back(half_persistence(q));
    for (const DiagramPoint& p : fa)
        for (const DiagramPoint& q : fb) candidates.push_back(cheb(p, q));
    std::sort(candidates.begin(), candidates.end());
    // Collapse floating-point noise clusters (1e-12) keeping each cluster's
    // largest member: the representative stays feasible whenever the true
    // optimum lies in its cluster, so the search can never overshoot it.
    std::vector<double> dedup;
    for (double c : candidates) {
        if (!dedup.empty() && c - dedup.back() <= 1e-12)
            dedup.back() = c;
        else
            dedup.push_back(c);
    }
    candidates.swap(dedup);

    FiniteMatcher matcher(fa, fb);
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (matcher.feasible(candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    matcher.feasible(candidates[lo]);
    const double finite_value = fa.empty() && fb.empty() ? 0.0 : candidates[lo];

    for (std::size_t left = 0; left < fa.size(); ++left) {
        const int right = matcher.left_match[left];
        if (right >= 0 && static_cast<std::size_t>(right) < fb.size()) {
            out.a_match[a_fin[left]] = static_cast<int>(b_fin[static_cast<std::size_t>(right)]);
            out.b_match[b_fin[static_cast<std::size_t>(right)]] =
                static_cast<int>(a_fin[left]);
        }
    }

    out.value = std::max(inf_value, finite_value);
    return out;
}

double bottleneck(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b) {
    return bottleneck_matching(a, b).value;
}

}  // namespace icgraph
