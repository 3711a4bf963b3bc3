#include "prism/group_ring.hpp"

#include <json.hpp>

namespace prism {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError{};
    return r;
}

int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError{};
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError{};
    return r;
}

namespace {

int64_t canon(int64_t v, int64_t m) {
    if (m == 0) return v;
    v %= m;
    return v < 0 ? v + m : v;
}

void require_compatible(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.p() != b.p()) throw std::invalid_argument("group ring elements over different primes");
    if (!(a.ring() == b.ring())) throw std::invalid_argument("group ring elements over different rings");
}

}  // namespace

GroupRingElement::GroupRingElement(int p, CoefficientRing ring)
    : p_(p), ring_(ring), c_(size_t(p) * p, 0) {
    if (p < 3 || p > 13 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime <= 13");
}

GroupRingElement GroupRingElement::one(int p, CoefficientRing ring) {
    return monomial(p, ring, 0, 0, 1);
}

GroupRingElement GroupRingElement::monomial(int p, CoefficientRing ring, int i, int j, int64_t c) {
    GroupRingElement x(p, ring);
    x.set_coeff(((i % p) + p) % p, ((j % p) + p) % p, c);
    return x;
}

void GroupRingElement::set_coeff(int i, int j, int64_t v) {
    if (i < 0 || i >= p_ || j < 0 || j >= p_) throw std::invalid_argument("exponent out of range");
    c_[idx(i, j)] = canon(v, ring_.modulus);
}

bool GroupRingElement::is_zero() const {
    for (int64_t v : c_)
        if (v != 0) return false;
    return true;
}

void GroupRingElement::reduce() {
    if (ring_.modulus == 0) return;
    for (auto& v : c_) v = canon(v, ring_.modulus);
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    require_compatible(*this, o);
    for (int k = 0; k < size(); ++k) c_[k] = canon(checked_add(c_[k], o.c_[k]), ring_.modulus);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    require_compatible(*this, o);
    for (int k = 0; k < size(); ++k) c_[k] = canon(checked_sub(c_[k], o.c_[k]), ring_.modulus);
    return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    require_compatible(a, b);
    const int p = a.p_;
    GroupRingElement r(p, a.ring_);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            int64_t ca = a.c_[i * p + j];
            if (ca == 0) continue;
            for (int k = 0; k < p; ++k) {
                int ik = i + k >= p ? i + k - p : i + k;
                for (int l = 0; l < p; ++l) {
                    int64_t cb = b.c_[k * p + l];
                    if (cb == 0) continue;
                    int jl = j + l >= p ? j + l - p : j + l;
                    int64_t& slot = r.c_[ik * p + jl];
                    slot = checked_add(slot, checked_mul(ca, cb));
                }
            }
        }
    r.reduce();
    return r;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement r(p_, ring_);
    for (int k = 0; k < size(); ++k) r.c_[k] = canon(checked_sub(0, c_[k]), ring_.modulus);
    return r;
}

GroupRingElement GroupRingElement::operator*(int64_t s) const {
    GroupRingElement r(p_, ring_);
    for (int k = 0; k < size(); ++k) r.c_[k] = canon(checked_mul(c_[k], s), ring_.modulus);
    return r;
}

GroupRingElement GroupRingElement::acted(int i, int j) const {
    if (i < 0 || i >= p_ || j < 0 || j >= p_) throw std::invalid_argument("group element out of range");
    GroupRingElement r(p_, ring_);
    for (int a = 0; a < p_; ++a)
        for (int b = 0; b < p_; ++b) {
            int ia = i + a >= p_ ? i + a - p_ : i + a;
            int jb = j + b >= p_ ? j + b - p_ : j + b;
            r.c_[ia * p_ + jb] = c_[a * p_ + b];
        }
    return r;
}

int64_t GroupRingElement::augmentation() const {
    int64_t s = 0;
    for (int64_t v : c_) s = checked_add(s, v);
    return canon(s, ring_.modulus);
}

GroupRingElement GroupRingElement::reduced_to(CoefficientRing target) const {
    if (target.modulus == 0 && ring_.modulus != 0)
        throw std::invalid_argument("cannot reduce Z/m to Z");
    GroupRingElement r(p_, target);
    for (int k = 0; k < size(); ++k) r.c_[k] = canon(c_[k], target.modulus);
    return r;
}

GroupRingElement GroupRingElement::lifted_to_z() const {
    GroupRingElement r(p_, CoefficientRing{0});
    r.c_ = c_;
    return r;
}

GroupRingElement GroupRingElement::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    GroupRingElement r = one(p_, ring_);
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
}

std::string GroupRingElement::to_string() const {
    std::string s;
    for (int i = 0; i < p_; ++i)
        for (int j = 0; j < p_; ++j) {
            int64_t v = c_[idx(i, j)];
            if (v == 0) continue;
            if (!s.empty()) s += v > 0 ? " + " : " - ";
            else if (v < 0) s += "-";
            int64_t a = v < 0 ? -v : v;
            std::string mono;
            if (i) mono += "x1" + (i > 1 ? "^" + std::to_string(i) : std::string());
            if (j) mono += std::string(mono.empty() ? "" : "*") + "x2" + (j > 1 ? "^" + std::to_string(j) : std::string());
            if (mono.empty()) s += std::to_string(a);
            else if (a == 1) s += mono;
            else s += std::to_string(a) + "*" + mono;
        }
    return s.empty() ? "0" : s;
}

SpecialElements SpecialElements::make(int p, CoefficientRing ring) {
    SpecialElements se;
    se.p = p;
    se.ring = ring;
    se.tau.reserve(p + 1);
    for (int k = 1; k <= p + 1; ++k) {
        // tau_1, tau_2, then tau_k = tau1 * tau2^(k-2) for 3 <= k <= p+1
        int i = k == 2 ? 0 : 1;
        int j = k == 1 ? 0 : (k == 2 ? 1 : k - 2);
        se.tau.push_back(GroupRingElement::monomial(p, ring, i, j));
    }
    GroupRingElement one = GroupRingElement::one(p, ring);
    se.t.reserve(p + 1);
    se.T.reserve(p + 1);
    for (int k = 0; k <= p; ++k) {
        se.t.push_back(se.tau[k] - one);
        GroupRingElement trace(p, ring);
        GroupRingElement pw = one;
        for (int j = 0; j < p; ++j) {
            trace += pw;
            pw = pw * se.tau[k];
        }
        se.T.push_back(trace);
    }
    se.TG = GroupRingElement(p, ring);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) se.TG.set_coeff(i, j, 1);
    return se;
}

std::string to_json_array(const GroupRingElement& x) {
    nlohmann::json j = x.coeffs();
    return j.dump();
}

GroupRingElement from_json_array(int p, CoefficientRing ring, const std::string& json) {
    auto j = nlohmann::json::parse(json);
    if (!j.is_array() || int(j.size()) != p * p)
        throw std::invalid_argument("coefficient list must have length p^2");
    GroupRingElement x(p, ring);
    for (int i = 0; i < p; ++i)
        for (int k = 0; k < p; ++k) x.set_coeff(i, k, j[size_t(i) * p + k].get<int64_t>());
    return x;
}

}  // namespace prism
