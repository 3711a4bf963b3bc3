#include "prism/finite_group.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace prism {

FiniteGroup::FiniteGroup(std::vector<int> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
    size_t n2 = table_.size();
    int n = int(0.5 + std::sqrt(double(n2)));
    if (size_t(n) * n != n2 || n == 0) throw std::invalid_argument("table must be order^2 entries");
    order_ = n;
    for (int v : table_)
        if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
    // identity
    id_ = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (mul(e, a) != a || mul(a, e) != a) {
                ok = false;
                break;
            }
        if (ok) {
            id_ = e;
            break;
        }
    }
    if (id_ < 0) throw std::invalid_argument("no identity element");
    // associativity (orders here are <= 81, cubic scan is fine)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument("table is not associative");
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == id_ && mul(b, a) == id_) {
                inv_[a] = b;
                break;
            }
        if (inv_[a] < 0) throw std::invalid_argument("element without inverse");
    }
    if (labels_.empty()) {
        labels_.resize(n);
        for (int a = 0; a < n; ++a) labels_[a] = "g" + std::to_string(a);
    }
    if (int(labels_.size()) != n) throw std::invalid_argument("label count mismatch");
}

int FiniteGroup::power(int a, int e) const {
    int base = a;
    if (e < 0) {
        base = inv_[a];
        e = -e;
    }
    int r = id_;
    for (int i = 0; i < e; ++i) r = mul(r, base);
    return r;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    std::vector<int> t(size_t(n) * n);
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        labels[a] = std::to_string(a);
        for (int b = 0; b < n; ++b) t[size_t(a) * n + b] = (a + b) % n;
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.order() * b.order();
    std::vector<int> t(size_t(n) * n);
    std::vector<std::string> labels(n);
    auto idx = [&](int x, int y) { return x * b.order() + y; };
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1) {
            labels[idx(x1, y1)] = "(" + a.label(x1) + "," + b.label(y1) + ")";
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    t[size_t(idx(x1, y1)) * n + idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
        }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::builtin(const std::string& name) {
    if (name == "c9") return cyclic(9);
    if (name == "c27") return cyclic(27);
    if (name == "c3xc3") return product(cyclic(3), cyclic(3));
    if (name == "c9xc3") return product(cyclic(9), cyclic(3));
    if (name == "c9xc9") return product(cyclic(9), cyclic(9));
    throw std::invalid_argument("unknown builtin group: " + name);
}

std::string FiniteGroup::to_json() const {
    nlohmann::json j;
    j["order"] = order_;
    j["table"] = table_;
    j["labels"] = labels_;
    return j.dump();
}

FiniteGroup FiniteGroup::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    return FiniteGroup(j.at("table").get<std::vector<int>>(),
                       j.value("labels", std::vector<std::string>{}));
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    int n = int(elements.size());
    std::vector<int> pos(g.order(), -1);
    for (int i = 0; i < n; ++i) pos[elements[i]] = i;
    std::vector<int> t(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int prod = g.mul(elements[i], elements[j]);
            if (pos[prod] < 0) throw std::invalid_argument("subset not closed under multiplication");
            t[size_t(i) * n + j] = pos[prod];
        }
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = g.label(elements[i]);
    return {FiniteGroup(std::move(t), std::move(labels)), std::move(elements)};
}

Subgroup kernel_subgroup(const FiniteGroup& g, const std::vector<int>& values) {
    std::vector<int> elems;
    for (int a = 0; a < g.order(); ++a)
        if (values[a] == 0) elems.push_back(a);
    return make_subgroup(g, elems);
}

namespace {

bool is_hom(const FiniteGroup& g, const std::vector<int>& v, int m) {
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if ((v[a] + v[b]) % m != v[g.mul(a, b)]) return false;
    return true;
}

// search for a Z/9 homomorphism reducing to v mod 3, by enumerating the
// (at most 3 per generator) compatible images on a generating set and
// propagating over the Cayley graph
std::vector<int> find_lift(const FiniteGroup& g, const std::vector<int>& v) {
    int n = g.order();
    std::vector<int> gens;
    {
        std::vector<char> span(n, 0);
        span[g.identity()] = 1;
        int covered = 1;
        while (covered < n) {
            int next = -1;
            for (int a = 0; a < n; ++a)
                if (!span[a]) {
                    next = a;
                    break;
                }
            gens.push_back(next);
            // close the span
            bool grew = true;
            span[next] = 1;
            ++covered;
            while (grew) {
                grew = false;
                for (int x = 0; x < n; ++x) {
                    if (!span[x]) continue;
                    for (int y = 0; y < n; ++y) {
                        if (!span[y]) continue;
                        int z = g.mul(x, y);
                        if (!span[z]) {
                            span[z] = 1;
                            ++covered;
                            grew = true;
                        }
                    }
                }
            }
        }
    }
    int k = int(gens.size());
    std::vector<int> choice(k, 0);
    for (;;) {
        // candidate images: v[gen] + 3 * choice
        std::vector<int> lift(n, -1);
        lift[g.identity()] = 0;
        bool ok = true;
        for (int i = 0; i < k; ++i) lift[gens[i]] = (v[gens[i]] + 3 * choice[i]) % 9;
        // propagate products until stable
        bool grew = true;
        while (grew && ok) {
            grew = false;
            for (int x = 0; x < n && ok; ++x) {
                if (lift[x] < 0) continue;
                for (int y = 0; y < n; ++y) {
                    if (lift[y] < 0) continue;
                    int z = g.mul(x, y);
                    int want = (lift[x] + lift[y]) % 9;
                    if (lift[z] < 0) {
                        lift[z] = want;
                        grew = true;
                    } else if (lift[z] != want) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (ok) {
            for (int x = 0; x < n; ++x)
                if (lift[x] < 0 || lift[x] % 3 != v[x]) ok = false;
        }
        if (ok && is_hom(g, lift, 9)) return lift;
        // next assignment
        int i = 0;
        while (i < k && ++choice[i] == 3) choice[i++] = 0;
        if (i == k) return {};
    }
}

}  // namespace

Character::Character(const FiniteGroup* g, std::vector<int> values) : g_(g), v_(std::move(values)) {
    if (int(v_.size()) != g_->order()) throw std::invalid_argument("value count mismatch");
    for (auto& x : v_) x = ((x % 3) + 3) % 3;
    if (!is_hom(*g_, v_, 3)) throw std::invalid_argument("values do not define a homomorphism");
    lift_ = find_lift(*g_, v_);
}

bool Character::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
}

const std::vector<int>& Character::lift() const {
    if (lift_.empty()) throw std::logic_error("character admits no homomorphic Z/9 lift");
    return lift_;
}

Character operator+(const Character& a, const Character& b) {
    if (a.g_ != b.g_) throw std::invalid_argument("characters on different groups");
    std::vector<int> v(a.v_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = (a.v_[i] + b.v_[i]) % 3;
    Character out(a.g_, std::move(v));
    if (a.has_lift() && b.has_lift()) {
        out.lift_.resize(a.v_.size());
        for (size_t i = 0; i < out.lift_.size(); ++i)
            out.lift_[i] = (a.lift_[i] + b.lift_[i]) % 9;
    }
    return out;
}

Character operator-(const Character& a, const Character& b) {
    if (a.g_ != b.g_) throw std::invalid_argument("characters on different groups");
    std::vector<int> v(a.v_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = ((a.v_[i] - b.v_[i]) % 3 + 3) % 3;
    Character out(a.g_, std::move(v));
    if (a.has_lift() && b.has_lift()) {
        out.lift_.resize(a.v_.size());
        for (size_t i = 0; i < out.lift_.size(); ++i)
            out.lift_[i] = ((a.lift_[i] - b.lift_[i]) % 9 + 9) % 9;
    }
    return out;
}

Character make_character(const FiniteGroup& g, const std::vector<int>& values) {
    return Character(&g, values);
}

int lambda2_residue(int i, int modulus) {
    // binomial(i, 2) on the canonical residue in {0, 1, 2}, taken mod `modulus`
    int r = ((i % 3) + 3) % 3;
    return (r * (r - 1) / 2) % modulus;
}

ScalarFunction s_theta(const Character& theta) {
    const FiniteGroup& g = theta.group();
    const auto& lift = theta.lift();  // throws without a lift
    // quotient by ker(lift) must be cyclic of order 9
    int kernel_size = 0;
    for (int a = 0; a < g.order(); ++a)
        if (lift[a] == 0) ++kernel_size;
    if (g.order() != 9 * kernel_size)
        throw std::invalid_argument("lift quotient is not cyclic of order 9");
    // deterministic sigma: smallest element with lift value exactly 1, so
    // that the lift sends sigma^k to k and theta(sigma^k h) = k mod 3
    int sigma = -1;
    for (int a = 0; a < g.order(); ++a)
        if (lift[a] == 1) {
            sigma = a;
            break;
        }
    if (sigma < 0) throw std::invalid_argument("no generator for the order-9 quotient");
    return s_from_lift(theta);
}

ScalarFunction s_from_lift(const Character& theta) {
    const FiniteGroup& g = theta.group();
    const auto& lift = theta.lift();
    ScalarFunction s{&g, 3, std::vector<int>(g.order(), 0)};
    // lift = hat + 3s pointwise, so s is the top base-3 digit of the lift
    for (int a = 0; a < g.order(); ++a) s.values[a] = (lift[a] / 3) % 3;
    return s;
}

ScalarFunction hat(const Character& theta) {
    ScalarFunction f{&theta.group(), 9, theta.values()};
    return f;
}

ScalarFunction hat_of(const ScalarFunction& fn) {
    ScalarFunction f{fn.g, 9, fn.values};
    for (auto& v : f.values) v = ((v % 3) + 3) % 3;
    return f;
}

ScalarFunction lambda2_theta(const Character& theta) {
    ScalarFunction f{&theta.group(), 3, theta.values()};
    for (auto& v : f.values) v = lambda2_residue(v, 3);
    return f;
}

ScalarFunction lambda2_hat(const Character& theta) {
    ScalarFunction f{&theta.group(), 9, theta.values()};
    for (auto& v : f.values) v = lambda2_residue(v, 9);
    return f;
}

ScalarFunction lambda2_lift(const Character& theta) {
    const auto& lift = theta.lift();
    ScalarFunction f{&theta.group(), 9, lift};
    for (auto& v : f.values) v = v * (v - 1) / 2 % 9;  // binomial on the 0..8 residue
    return f;
}

VerificationReport verify_scalar_zoo(const FiniteGroup& g, const Character& theta) {
    VerificationReport rep;
    rep.suite = "scalar function decompositions";
    if (!theta.has_lift()) {
        rep.fail("character lift exists", "no homomorphic Z/9 lift");
        return rep;
    }
    auto s = s_theta(theta);
    auto th = hat(theta);
    auto l2h = lambda2_hat(theta);
    auto l2l = lambda2_lift(theta);
    const auto& lift = theta.lift();
    bool dec = true, lam = true, range = true;
    for (int a = 0; a < g.order(); ++a) {
        if (lift[a] != (th.values[a] + 3 * s.values[a]) % 9) dec = false;
        if (l2l.values[a] != (l2h.values[a] + 3 * ((th.values[a] + 1) * s.values[a])) % 9) lam = false;
        if (th.values[a] < 0 || th.values[a] > 2) range = false;
    }
    rep.require("lift == hat + 3 s pointwise", dec);
    rep.require("lambda2(lift) == lambda2(hat) + 3 (hat + 1) s pointwise", lam);
    rep.require("hat values lie in {0, 1, 2}", range);
    return rep;
}

}  // namespace prism
