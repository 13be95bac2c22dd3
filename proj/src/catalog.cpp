#include "lipwb/errors.hpp"
#include "lipwb/metric.hpp"

#include <set>

namespace lipwb {

namespace {

Q inv(long n) { return Q(1, n); }

Q pow3_neg(long n) { return Q(1) / qpow(Q(3), static_cast<unsigned long>(n)); }

Q get_param(const std::map<std::string, Q>& params, const std::string& key, const Q& dflt) {
    auto it = params.find(key);
    return it == params.end() ? dflt : it->second;
}

void check_keys(const std::string& model, const std::map<std::string, Q>& params, const std::set<std::string>& allowed,
                bool allow_eps_list = false) {
    for (const auto& [k, v] : params) {
        if (allowed.count(k)) continue;
        if (allow_eps_list && k.rfind("eps", 0) == 0 && k.size() > 3) continue;
        throw ModelDefinitionError(model + ": unknown parameter '" + k + "'");
    }
}

std::string origin_label(std::size_t r) { return r == 0 ? "0" : "p" + std::to_string(r); }
std::string p1_label(std::size_t r) { return "p" + std::to_string(r + 1); }

MetricModel discrete_model() {
    MetricModel m;
    m.name = "discrete";
    m.row_rule = [](std::size_t i, std::size_t j) -> Q { return i == j ? Q(0) : Q(1); };
    m.row_label = origin_label;
    m.limits.L_n = [](long) -> Q { return Q(1); };
    m.limits.L = Q(1);
    m.limits.psi = [](long) -> Q { return Q(0); };
    m.limits.phi_liminf = Q(0);
    m.limits.monotone_tails = true;
    return m;
}

MetricModel prop23_model() {
    MetricModel m;
    m.name = "prop23";
    m.row_rule = [](std::size_t i, std::size_t j) -> Q {
        if (i == j) return Q(0);
        if (i == 0 || j == 0) return Q(1);
        return Q(2);
    };
    m.row_label = origin_label;
    m.limits.L_n = [](long) -> Q { return Q(2); };
    m.limits.L = Q(2);
    m.limits.psi = [](long) -> Q { return Q(0); };
    m.limits.phi_liminf = Q(0);
    m.limits.monotone_tails = true;
    return m;
}

MetricModel prop24_model() {
    MetricModel m;
    m.name = "prop24";
    auto x = [](std::size_t r) {
        return r == 0 ? Q(0) : pow2_neg(static_cast<unsigned long>(r) * static_cast<unsigned long>(r));
    };
    m.row_rule = [x](std::size_t i, std::size_t j) -> Q { return qabs(x(i) - x(j)); };
    m.row_label = [](std::size_t r) { return r == 0 ? std::string("0") : "2^-" + std::to_string(r * r); };
    m.limits.L_n = [](long n) -> Q { return pow2_neg(static_cast<unsigned long>(n * n)); };
    m.limits.L = Q(0);
    m.limits.psi = [](long n) -> Q { return pow2_neg(static_cast<unsigned long>(n * n)); };
    m.limits.phi_liminf = Q(0);
    m.limits.monotone_tails = true;
    return m;
}

MetricModel example33_model() {
    MetricModel m;
    m.name = "example33";
    m.base_is_p1 = true;
    m.row_rule = [](std::size_t i, std::size_t j) -> Q {
        if (i == j) return Q(0);
        long n = static_cast<long>(i) + 1, k = static_cast<long>(j) + 1;
        if (std::min(n, k) == 1) return Q(1) + inv(std::max(n, k));
        return Q(1) + inv(std::min(n, k));
    };
    m.row_label = p1_label;
    m.limits.L_n = [](long n) -> Q { return n == 1 ? Q(1) : Q(1) + inv(n); };
    m.limits.L = Q(1);
    m.limits.psi = [](long n) -> Q { return n == 1 ? Q(0) : inv(n); };
    m.limits.phi_liminf = Q(0);
    return m;
}

MetricModel example35_model() {
    MetricModel m;
    m.name = "example35";
    m.row_rule = [](std::size_t i, std::size_t j) -> Q {
        if (i == j) return Q(0);
        if (i == 0 || j == 0) return Q(1) + inv(static_cast<long>(std::max(i, j)));
        return Q(1) + inv(static_cast<long>(i)) + inv(static_cast<long>(j));
    };
    m.row_label = origin_label;
    m.limits.L_n = [](long n) -> Q { return Q(1) + inv(n); };
    m.limits.L = Q(1);
    m.limits.psi = [](long n) -> Q { return inv(n); };
    m.limits.phi_liminf = Q(0);
    m.limits.origin_limit = Q(1);
    m.limits.monotone_tails = true;
    return m;
}

MetricModel dmqr41_model() {
    MetricModel m;
    m.name = "dmqr41";
    m.base_is_p1 = true;
    m.row_rule = [](std::size_t i, std::size_t j) -> Q {
        if (i == j) return Q(0);
        return Q(1) + inv(static_cast<long>(std::max(i, j)) + 1);
    };
    m.row_label = p1_label;
    m.limits.L_n = [](long) -> Q { return Q(1); };
    m.limits.L = Q(1);
    m.limits.psi = [](long) -> Q { return Q(0); };
    m.limits.phi_liminf = Q(0);
    m.limits.monotone_tails = true;
    return m;
}

MetricModel example44_model() {
    MetricModel m;
    m.name = "example44";
    m.row_rule = [](std::size_t i, std::size_t j) -> Q {
        if (i == j) return Q(0);
        if (i == 0 || j == 0) return Q(1, 2) + inv(static_cast<long>(std::max(i, j)));
        return Q(1) + inv(static_cast<long>(i + j));
    };
    m.row_label = origin_label;
    m.limits.L_n = [](long) -> Q { return Q(1); };
    m.limits.L = Q(1);
    m.limits.psi = [](long) -> Q { return Q(0); };
    m.limits.phi_liminf = Q(0);
    m.limits.origin_limit = Q(1, 2);
    m.limits.monotone_tails = true;
    return m;
}

MetricModel example48_model() {
    MetricModel m;
    m.name = "example48";
    m.base_is_p1 = true;
    m.row_rule = [](std::size_t i, std::size_t j) -> Q {
        if (i == j) return Q(0);
        long n = static_cast<long>(std::min(i, j)) + 1, k = static_cast<long>(std::max(i, j)) + 1;
        return Q(2) - pow3_neg(n) - 2 * pow3_neg(k);
    };
    m.row_label = p1_label;
    m.limits.L_n = [](long n) -> Q { return Q(2) - pow3_neg(n); };
    m.limits.L = Q(2);
    m.limits.psi = [](long n) -> Q { return Q(-pow3_neg(n)); };
    m.limits.phi_liminf = Q(0);
    m.limits.monotone_tails = true;
    return m;
}

MetricModel dmqr44_model(const std::map<std::string, Q>& params) {
    check_keys("dmqr44", params, {}, true);
    QVec explicit_eps;
    for (long k = 1;; ++k) {
        auto it = params.find("eps" + std::to_string(k));
        if (it == params.end()) break;
        explicit_eps.push_back(it->second);
    }
    if (explicit_eps.size() != params.size())
        throw ModelDefinitionError("dmqr44: eps parameters must be eps1, eps2, ... without gaps");
    for (std::size_t k = 0; k < explicit_eps.size(); ++k) {
        if (explicit_eps[k] <= 0 || explicit_eps[k] >= Q(1, 2))
            throw ModelDefinitionError("dmqr44: eps" + std::to_string(k + 1) + " not in ]0, 1/2[");
        if (k > 0 && explicit_eps[k] <= explicit_eps[k - 1])
            throw ModelDefinitionError("dmqr44: eps sequence must be strictly increasing");
    }
    auto eps = [explicit_eps](long n) -> Q {
        long K = static_cast<long>(explicit_eps.size());
        if (n <= K) return explicit_eps[static_cast<std::size_t>(n - 1)];
        if (K == 0) return Q(1, 2) - pow2_neg(static_cast<unsigned long>(n + 1));
        const Q& last = explicit_eps.back();
        return last + (Q(1, 2) - last) * (Q(1) - pow2_neg(static_cast<unsigned long>(n - K)));
    };
    MetricModel m;
    m.name = "dmqr44";
    m.params = params;
    m.row_rule = [eps](std::size_t i, std::size_t j) -> Q {
        if (i == j) return Q(0);
        long n = static_cast<long>(i), k = static_cast<long>(j);
        if (n == 0) return Q(k);
        if (k == 0) return Q(n);
        return Q(n + k) - eps(std::max(n, k));
    };
    m.row_label = origin_label;
    m.limits.bounded = false;
    m.limits.excess_bounded = true;
    m.eps = eps;
    return m;
}

// rows 2g-2, 2g-1 hold q_g, p_g; the base is q_1
MetricModel thm51star_model(const std::map<std::string, Q>& params) {
    check_keys("thm51star", params, {"levels"});
    Q levels = get_param(params, "levels", Q(3));
    if (levels < 1 || levels.get_den() != 1 || levels > 20)
        throw ModelDefinitionError("thm51star: levels must be an integer in 1..20");
    MetricModel m;
    m.name = "thm51star";
    m.params["levels"] = levels;
    m.row_rule = [](std::size_t i, std::size_t j) -> Q {
        if (i == j) return Q(0);
        if (i / 2 == j / 2) return Q(1);
        return Q(2);
    };
    m.row_label = [](std::size_t r) { return std::string(r % 2 ? "p" : "q") + std::to_string(r / 2 + 1); };
    return m;
}

MetricModel prop53_model(const std::map<std::string, Q>& params) {
    check_keys("prop53", params, {"levels"});
    Q levels = get_param(params, "levels", Q(3));
    if (levels < 1 || levels.get_den() != 1 || levels > 20)
        throw ModelDefinitionError("prop53: levels must be an integer in 1..20");
    MetricModel m;
    m.name = "prop53";
    m.params["levels"] = levels;
    m.row_rule = [](std::size_t i, std::size_t j) -> Q { return i == j ? Q(0) : Q(1); };
    m.row_label = [](std::size_t r) {
        if (r == 0) return std::string("0");
        return std::string((r - 1) % 2 ? "q" : "p") + std::to_string((r - 1) / 2 + 1);
    };
    return m;
}

MetricModel thm57_model(const std::map<std::string, Q>& params) {
    check_keys("thm57", params, {"c", "levels"});
    Q c = get_param(params, "c", Q(2));
    Q levels = get_param(params, "levels", Q(3));
    if (c <= 1) throw ModelDefinitionError("thm57: c must exceed 1");
    if (levels < 1 || levels.get_den() != 1 || levels > 64)
        throw ModelDefinitionError("thm57: levels must be an integer in 1..64");
    std::size_t K = levels.get_num().get_ui();
    MetricModel m;
    m.name = "thm57";
    m.params["c"] = c;
    m.params["levels"] = levels;
    m.row_rule = [K](std::size_t i, std::size_t j) -> Q {
        if (i == j) return Q(0);
        if (i == 0 || j == 0) return Q(1);
        return (i - 1) / K == (j - 1) / K ? Q(1) : Q(2);
    };
    m.row_label = [K](std::size_t r) {
        if (r == 0) return std::string("0");
        return "p" + std::to_string((r - 1) / K + 1) + "," + std::to_string((r - 1) % K + 1);
    };
    return m;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {"discrete",  "prop23",  "prop24",   "example33",
                                                   "example35", "dmqr41",  "example44", "example48",
                                                   "dmqr44",    "thm51star", "prop53",  "thm57"};
    return names;
}

MetricModel catalog(const std::string& name, const std::map<std::string, Q>& params) {
    MetricModel m;
    if (name == "dmqr44") return dmqr44_model(params);
    if (name == "thm51star") return thm51star_model(params);
    if (name == "prop53") return prop53_model(params);
    if (name == "thm57") return thm57_model(params);
    if (name == "discrete") m = discrete_model();
    else if (name == "prop23") m = prop23_model();
    else if (name == "prop24") m = prop24_model();
    else if (name == "example33") m = example33_model();
    else if (name == "example35") m = example35_model();
    else if (name == "dmqr41") m = dmqr41_model();
    else if (name == "example44") m = example44_model();
    else if (name == "example48") m = example48_model();
    else throw ModelDefinitionError("unknown catalog model '" + name + "'");
    check_keys(name, params, {});
    return m;
}

MetricModel pow4_model() {
    MetricModel m;
    m.name = "pow4";
    m.base_is_p1 = true;
    m.row_rule = [](std::size_t i, std::size_t j) -> Q {
        mpz_class a, b;
        mpz_ui_pow_ui(a.get_mpz_t(), 4, i + 1);
        mpz_ui_pow_ui(b.get_mpz_t(), 4, j + 1);
        return Q(abs(a - b));
    };
    m.row_label = [](std::size_t r) { return "4^" + std::to_string(r + 1); };
    m.limits.bounded = false;
    return m;
}

}  // namespace lipwb
