#include "trisat/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace trisat {

namespace {

// int64 arithmetic that throws instead of wrapping.
struct Checked {
    std::int64_t v;

    friend Checked operator+(Checked a, Checked b)
    {
        std::int64_t r;
        if (__builtin_add_overflow(a.v, b.v, &r))
            throw std::overflow_error("integer overflow in formula evaluation");
        return {r};
    }
    friend Checked operator-(Checked a, Checked b)
    {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r))
            throw std::overflow_error("integer overflow in formula evaluation");
        return {r};
    }
    friend Checked operator*(Checked a, Checked b)
    {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r))
            throw std::overflow_error("integer overflow in formula evaluation");
        return {r};
    }
};

Checked C(std::int64_t v) { return {v}; }

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

void require_ordered(std::int64_t n1, std::int64_t n2, std::int64_t n3)
{
    require(n3 >= 1, "part sizes must be positive");
    require(n1 >= n2 && n2 >= n3, "part sizes must satisfy n1 >= n2 >= n3");
}

std::int64_t half_gap(std::int64_t l, std::int64_t m) { return (l - m) / 2; }

BoundRecord record(std::string name, std::vector<std::pair<std::string, std::int64_t>> params, Checked value,
                   BoundKind kind, bool hyp, std::string hypothesis, std::string anchor)
{
    BoundRecord r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.value = value.v;
    r.kind = kind;
    r.hypothesis_satisfied = hyp;
    r.hypothesis = std::move(hypothesis);
    r.anchor = std::move(anchor);
    return r;
}

} // namespace

std::string to_string(BoundKind kind)
{
    switch (kind) {
    case BoundKind::exact:
        return "exact";
    case BoundKind::upper:
        return "upper";
    case BoundKind::lower:
        return "lower";
    case BoundKind::reference:
        return "reference";
    }
    return "unknown";
}

std::int64_t large_part_threshold(std::int64_t x)
{
    return (C(32) * C(x) * C(x) * C(x) + C(40) * C(x) * C(x) + C(11) * C(x)).v;
}

BoundRecord f_con1_upper(std::int64_t n1, std::int64_t n2, std::int64_t n3, std::int64_t l, std::int64_t m)
{
    require(l >= m && m >= 1, "con1 needs l >= m >= 1");
    require_ordered(n1, n2, n3);
    Checked sum = C(n1) + C(n2) + C(n3);
    Checked value = C(2) * C(m) * sum + (C(l) - C(m)) * (C(n2) + C(2) * C(n3)) - C(3) * C(l) * C(m) - C(3);
    bool hyp = n3 >= std::max((C(l) + C(2)).v, (C(3) * C(l) - C(2) * C(m) - C(1)).v);
    return record("con1", {{"n1", n1}, {"n2", n2}, {"n3", n3}, {"l", l}, {"m", m}}, value, BoundKind::upper, hyp,
                  "n3 >= max{l+2, 3l-2m-1}", "K_{l,m,m}-saturated hub construction (K3 or P4 removed)");
}

BoundRecord f_con3_upper(std::int64_t n1, std::int64_t n2, std::int64_t n3, std::int64_t l, std::int64_t m,
                         std::int64_t p)
{
    require(l >= m && m > p && p >= 1, "con3 needs l >= m > p >= 1");
    require_ordered(n1, n2, n3);
    Checked sum = C(n1) + C(n2) + C(n3);
    Checked value = C(2) * (C(m) - C(1)) * sum + (C(l) - C(m)) * (C(n2) + C(2) * C(n3)) -
                    C(3) * C(l) * (C(m) - C(1)) + C(3) * C(m) - C(3);
    return record("con3", {{"n1", n1}, {"n2", n2}, {"n3", n3}, {"l", l}, {"m", m}, {"p", p}}, value,
                  BoundKind::upper, n3 >= l, "n3 >= l", "K_{l,m,p}-saturated hub construction, m > p");
}

BoundRecord f_con4_upper(std::int64_t n, std::int64_t l, std::int64_t m)
{
    require(l >= m && m >= 1, "con4 needs l >= m >= 1");
    require(n >= 1, "n must be positive");
    std::int64_t t = half_gap(l, m);
    Checked value = C(3) * (C(l) + C(m)) * C(n) - C(3) * (C(l) - C(m) - C(t)) * C(t) - C(3) * C(l) * C(m) - C(3);
    bool hyp = n >= std::max((C(l) + C(2)).v, (C(3) * C(l) + C(t) - C(2) * C(m) - C(2)).v);
    return record("con4", {{"n", n}, {"l", l}, {"m", m}}, value, BoundKind::upper, hyp,
                  "n >= max{l+2, 3l+floor((l-m)/2)-2m-2}", "balanced K_{l,m,m} construction with T_i blocks");
}

BoundRecord f_con5_upper(std::int64_t n, std::int64_t l, std::int64_t m, std::int64_t p)
{
    require(l >= m && m > p && p >= 1, "con5 needs l >= m > p >= 1");
    require(n >= 1, "n must be positive");
    std::int64_t t = half_gap(l, m);
    Checked value = C(3) * (C(l) + C(m) - C(2)) * C(n) - C(3) * (C(m) - C(1)) * (C(l) - C(1)) + C(3) * C(t) * C(t) -
                    C(3) * (C(l) - C(m)) * C(t);
    bool hyp = n >= (C(l) + C(t) - C(1)).v;
    return record("con5", {{"n", n}, {"l", l}, {"m", m}, {"p", p}}, value, BoundKind::upper, hyp,
                  "n >= l+floor((l-m)/2)-1", "balanced K_{l,m,p} construction with T_i blocks, m > p");
}

BoundRecord f_sat_lll(std::int64_t n1, std::int64_t n2, std::int64_t n3, std::int64_t l)
{
    require(l >= 1, "sat_lll needs l >= 1");
    require_ordered(n1, n2, n3);
    Checked value = C(2) * C(l) * (C(n1) + C(n2) + C(n3)) - C(3) * C(l) * C(l) - C(3);
    bool hyp = n3 >= large_part_threshold(l);
    auto r = record("sat_lll", {{"n1", n1}, {"n2", n2}, {"n3", n3}, {"l", l}}, value,
                    hyp ? BoundKind::exact : BoundKind::upper, hyp, "n3 >= 32l^3+40l^2+11l",
                    "sat(K_{n1,n2,n3}, K_{l,l,l})");
    if (!hyp)
        r.note = "threshold not met; value is the construction bound only";
    return r;
}

BoundRecord f_sat_lll1(std::int64_t n1, std::int64_t n2, std::int64_t n3, std::int64_t l)
{
    require(l >= 2, "sat_lll1 needs l >= 2");
    require_ordered(n1, n2, n3);
    Checked value = C(2) * (C(l) - C(1)) * (C(n1) + C(n2) + C(n3)) - C(3) * (C(l) - C(1)) * (C(l) - C(1));
    bool hyp = n3 >= large_part_threshold(l - 1);
    auto r = record("sat_lll1", {{"n1", n1}, {"n2", n2}, {"n3", n3}, {"l", l}}, value,
                    hyp ? BoundKind::exact : BoundKind::upper, hyp, "n3 >= 32(l-1)^3+40(l-1)^2+11(l-1)",
                    "sat(K_{n1,n2,n3}, K_{l,l,l-1})");
    if (!hyp)
        r.note = "threshold not met; value is the construction bound only";
    return r;
}

BoundRecord f_lll2_lower(std::int64_t n, std::int64_t l)
{
    require(l >= 3, "lll2_lower needs l >= 3");
    require(n >= 1, "n must be positive");
    Checked c = C(72) * C(l) * C(l) - C(40) * C(l) + C(54);
    Checked value = C(6) * (C(l) - C(1)) * C(n) - c;
    auto r = record("lll2_lower", {{"n", n}, {"l", l}}, value, BoundKind::lower, false, "n sufficiently large",
                    "lower bound on sat(K_{n,n,n}, K_{l,l,l-2})");
    r.note = "asymptotic hypothesis; not decidable by a finite check";
    return r;
}

BoundRecord f_c4(std::int64_t n1, std::int64_t n2, std::int64_t n3)
{
    require_ordered(n1, n2, n3);
    return record("c4", {{"n1", n1}, {"n2", n2}, {"n3", n3}}, C(n1) + C(n2) + C(n3), BoundKind::exact, n3 >= 2,
                  "n1 >= n2 >= n3 >= 2", "sat(K_{n1,n2,n3}, C4)");
}

BoundRecord f_ehm(std::int64_t n, std::int64_t k)
{
    require(k >= 2 && n >= 1, "ehm needs k >= 2, n >= 1");
    Checked binom = C(((C(k) - C(1)) * (C(k) - C(2))).v / 2);
    Checked value = (C(k) - C(2)) * C(n) - binom;
    return record("ehm", {{"n", n}, {"k", k}}, value, BoundKind::reference, n >= k, "n >= k",
                  "Erdos-Hajnal-Moon sat(n, K_k)");
}

BoundRecord f_bw(std::int64_t n1, std::int64_t n2, std::int64_t l, std::int64_t m)
{
    require(n1 >= 1 && n2 >= 1 && l >= 1 && m >= 1, "bw needs positive parameters");
    Checked value = (C(m) - C(1)) * C(n1) + (C(l) - C(1)) * C(n2) - (C(m) - C(1)) * (C(l) - C(1));
    bool hyp = l >= 2 && l <= n1 && m >= 2 && m <= n2;
    return record("bw", {{"n1", n1}, {"n2", n2}, {"l", l}, {"m", m}}, value, BoundKind::reference, hyp,
                  "2 <= l <= n1, 2 <= m <= n2", "Bollobas-Wessel bipartite saturation");
}

BoundRecord f_ms_upper(std::int64_t n, std::int64_t l, std::int64_t m)
{
    require(n >= 1 && l >= 1 && m >= 1, "ms_upper needs positive parameters");
    Checked s = C(l) + C(m) - C(2);
    Checked value = s * C(n) - C((s * s).v / 4);
    return record("ms_upper", {{"n", n}, {"l", l}, {"m", m}}, value, BoundKind::reference, true, "none stated",
                  "Moshkovitz-Shapira upper bound on sat(K_{n,n}, K_{l,m})");
}

BoundRecord f_gks_lower(std::int64_t n, std::int64_t l, std::int64_t m)
{
    require(n >= 1 && l >= 1 && m >= 1, "gks_lower needs positive parameters");
    Checked s = C(l) + C(m) - C(2);
    return record("gks_lower", {{"n", n}, {"l", l}, {"m", m}}, s * C(n) - s * s, BoundKind::reference, true,
                  "none stated", "Gan-Korandi-Sudakov lower bound on sat(K_{n,n}, K_{l,m})");
}

BoundRecord f_fjpw(std::int64_t k, std::int64_t n)
{
    require(k >= 3 && n >= 1, "fjpw needs k >= 3, n >= 1");
    Checked a = C(2) * C(k) * C(n) + C(n) * C(n) - C(4) * C(k) - C(1);
    Checked b = C(3) * C(k) * C(n) - C(3) * C(n) - C(6);
    return record("fjpw", {{"k", k}, {"n", n}}, C(std::min(a.v, b.v)), BoundKind::reference, n >= 100,
                  "k >= 3, n >= 100", "Ferrara-Jacobson-Pfender-Wenger sat(K_k^n, K_3)");
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& formula_catalog()
{
    static const std::vector<std::pair<std::string, std::vector<std::string>>> catalog{
        {"con1", {"n1", "n2", "n3", "l", "m"}},
        {"con3", {"n1", "n2", "n3", "l", "m", "p"}},
        {"con4", {"n", "l", "m"}},
        {"con5", {"n", "l", "m", "p"}},
        {"sat_lll", {"n1", "n2", "n3", "l"}},
        {"sat_lll1", {"n1", "n2", "n3", "l"}},
        {"lll2_lower", {"n", "l"}},
        {"c4", {"n1", "n2", "n3"}},
        {"ehm", {"n", "k"}},
        {"bw", {"n1", "n2", "l", "m"}},
        {"ms_upper", {"n", "l", "m"}},
        {"gks_lower", {"n", "l", "m"}},
        {"fjpw", {"k", "n"}},
    };
    return catalog;
}

BoundRecord evaluate_formula(const std::string& name, const std::map<std::string, std::int64_t>& params)
{
    const auto& catalog = formula_catalog();
    auto it = std::find_if(catalog.begin(), catalog.end(), [&](const auto& e) { return e.first == name; });
    if (it == catalog.end())
        throw std::invalid_argument("unknown formula '" + name + "'");
    const auto& names = it->second;
    for (const auto& [key, value] : params)
        if (std::find(names.begin(), names.end(), key) == names.end())
            throw std::invalid_argument("formula '" + name + "' has no parameter '" + key + "'");
    std::vector<std::int64_t> a;
    for (const auto& key : names) {
        auto found = params.find(key);
        if (found == params.end())
            throw std::invalid_argument("formula '" + name + "' needs parameter '" + key + "'");
        a.push_back(found->second);
    }
    if (name == "con1")
        return f_con1_upper(a[0], a[1], a[2], a[3], a[4]);
    if (name == "con3")
        return f_con3_upper(a[0], a[1], a[2], a[3], a[4], a[5]);
    if (name == "con4")
        return f_con4_upper(a[0], a[1], a[2]);
    if (name == "con5")
        return f_con5_upper(a[0], a[1], a[2], a[3]);
    if (name == "sat_lll")
        return f_sat_lll(a[0], a[1], a[2], a[3]);
    if (name == "sat_lll1")
        return f_sat_lll1(a[0], a[1], a[2], a[3]);
    if (name == "lll2_lower")
        return f_lll2_lower(a[0], a[1]);
    if (name == "c4")
        return f_c4(a[0], a[1], a[2]);
    if (name == "ehm")
        return f_ehm(a[0], a[1]);
    if (name == "bw")
        return f_bw(a[0], a[1], a[2], a[3]);
    if (name == "ms_upper")
        return f_ms_upper(a[0], a[1], a[2]);
    if (name == "gks_lower")
        return f_gks_lower(a[0], a[1], a[2]);
    return f_fjpw(a[0], a[1]);
}

} // namespace trisat
