#include "wavemem/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace wavemem {

EstimatorKind estimator_kind_from_string(const std::string& name) {
    if (name == "logreg") return EstimatorKind::logreg;
    if (name == "whittle") return EstimatorKind::whittle;
    throw std::invalid_argument("unknown estimator kind '" + name + "'");
}

std::string to_string(EstimatorKind kind) {
    return kind == EstimatorKind::logreg ? "logreg" : "whittle";
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double ks_normal_distance(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("ks_normal_distance: empty sample");
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    double dist = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double cdf = normal_cdf(values[i]);
        dist = std::max(dist, std::abs(cdf - static_cast<double>(i) / n));
        dist = std::max(dist, std::abs(static_cast<double>(i + 1) / n - cdf));
    }
    return dist;
}

namespace {

struct ResolvedScales {
    int L = 0;
    int upper = 0;
};

ResolvedScales resolve_scales(const McConfig& config, int max_scale_of_n) {
    ResolvedScales r;
    r.L = config.L >= 0 ? config.L
                        : default_lower_scale(static_cast<long long>(config.plan.n), config.beta,
                                              max_scale_of_n);
    if (config.kind == EstimatorKind::logreg) {
        r.upper = r.L + config.ell;
    } else {
        r.upper = config.U >= 0 ? config.U : r.L + config.ell;
    }
    if (r.upper > max_scale_of_n)
        throw std::invalid_argument("run_mc: requested scales exceed the sample's maximal scale");
    return r;
}

}  // namespace

McSummary run_mc(const McConfig& config) {
    if (config.replicates < 2) throw std::invalid_argument("run_mc: need at least 2 replicates");
    const WaveletSpec spec = make_family(config.order);
    const long long n = static_cast<long long>(config.plan.n);
    const int j_top = max_scale(n, spec.support_length);
    const FilterBank bank = build_filters(spec, j_top);
    const ResolvedScales scales = resolve_scales(config, j_top);

    RegressionConfig reg;
    WhittleConfig whit;
    std::vector<double> weights = config.weights;
    if (config.kind == EstimatorKind::logreg) {
        if (weights.empty()) weights = regression_weights(config.ell);
        reg.L = scales.L;
        reg.ell = config.ell;
        reg.weights = weights;
        reg.weight_mode = config.weights.empty() ? WeightMode::ols : WeightMode::custom;
    } else {
        whit.L = scales.L;
        whit.U = scales.upper;
    }

    McSummary summary;
    summary.replicates = config.replicates;
    summary.n = n;
    summary.L = scales.L;
    summary.upper = scales.upper;
    summary.kind = config.kind;
    summary.d_true = config.plan.farima.d;
    summary.asymptotic_var =
        config.kind == EstimatorKind::logreg
            ? regression_variance(spec, config.plan.farima.d, weights)
            : whittle_variance(spec, config.plan.farima.d, scales.upper - scales.L);

    summary.estimates.assign(static_cast<std::size_t>(config.replicates), 0.0);
    std::atomic<int> next{0};
    std::atomic<int> failed_replicate{-1};
    std::string failure_message;
    std::mutex failure_mutex;
    const unsigned threads =
        std::max(1u, std::min(std::thread::hardware_concurrency(),
                              static_cast<unsigned>(config.replicates)));
    auto worker = [&]() {
        for (;;) {
            const int r = next.fetch_add(1);
            if (r >= config.replicates || failed_replicate.load() >= 0) return;
            try {
                SimulationPlan plan = config.plan;
                plan.seed = mix_seed(config.seed, static_cast<std::uint64_t>(r));
                plan.farima.seed = plan.seed;
                const Sample sample = simulate_md(plan);
                const Scalogram scal = scalogram(transform(bank, sample));
                summary.estimates[static_cast<std::size_t>(r)] =
                    config.kind == EstimatorKind::logreg ? estimate_logreg(scal, reg)
                                                         : estimate_whittle(scal, whit);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (failed_replicate.load() < 0) {
                    failed_replicate.store(r);
                    failure_message = e.what();
                }
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failed_replicate.load() >= 0)
        throw std::runtime_error("run_mc: replicate " + std::to_string(failed_replicate.load()) +
                                 " failed: " + failure_message);

    double mean = 0.0;
    for (double v : summary.estimates) mean += v;
    mean /= config.replicates;
    double var = 0.0;
    for (double v : summary.estimates) var += (v - mean) * (v - mean);
    var /= (config.replicates - 1);
    summary.mean_d_hat = mean;
    summary.sd_d_hat = std::sqrt(var);
    const double rate = static_cast<double>(n) * std::exp2(-scales.L);
    summary.scaled_var = rate * var;

    std::vector<double> standardized(summary.estimates.size());
    const double sd_asym = std::sqrt(summary.asymptotic_var / rate);
    for (std::size_t i = 0; i < summary.estimates.size(); ++i)
        standardized[i] = (summary.estimates[i] - summary.d_true) / sd_asym;
    summary.ks_distance = ks_normal_distance(std::move(standardized));
    return summary;
}

McConfig mc_config_from_json(const nlohmann::json& j) {
    McConfig c;
    const nlohmann::json& model = j.at("model");
    if (model.at("model").get<std::string>() != "farima00")
        throw std::invalid_argument("mc config: only model \"farima00\" is supported");
    c.plan.farima.d = model.at("d").get<double>();
    c.plan.farima.law = innovation_law_from_string(model.at("innovations").get<std::string>());
    c.plan.farima.ma_truncation = model.value("ma_truncation", std::size_t{1} << 16);
    c.plan.n = j.at("n").get<std::size_t>();
    c.plan.burn_in = j.value("burn_in", c.plan.farima.ma_truncation);
    c.plan.K = integration_order(c.plan.farima.d);
    c.order = j.value("order", 2);
    c.replicates = j.at("replicates").get<int>();
    c.beta = j.value("beta", 2.0);
    c.seed = j.value("seed", model.value("seed", std::uint64_t{0}));
    c.plan.seed = c.seed;
    c.plan.farima.seed = c.seed;

    const nlohmann::json& est = j.at("estimator");
    c.kind = estimator_kind_from_string(est.at("kind").get<std::string>());
    c.L = est.value("L", -1);
    if (c.kind == EstimatorKind::logreg) {
        c.ell = est.value("ell", 3);
        if (est.contains("weights") && est.at("weights").is_array())
            c.weights = est.at("weights").get<std::vector<double>>();
    } else {
        c.U = est.value("U", -1);
        c.ell = est.value("ell", 3);
    }
    if (j.contains("outputs")) {
        c.replicates_csv = j.at("outputs").value("replicates_csv", "");
        c.summary_json = j.at("outputs").value("summary_json", "");
    }
    return c;
}

nlohmann::json mc_summary_to_json(const McConfig& config, const McSummary& summary) {
    nlohmann::json j;
    j["estimator"] = to_string(summary.kind);
    j["replicates"] = summary.replicates;
    j["n"] = summary.n;
    j["order"] = config.order;
    j["d_true"] = summary.d_true;
    j["L"] = summary.L;
    j[summary.kind == EstimatorKind::logreg ? "ell" : "U"] =
        summary.kind == EstimatorKind::logreg ? summary.upper - summary.L : summary.upper;
    j["innovations"] = to_string(config.plan.farima.law);
    j["seed"] = config.seed;
    j["mean_d_hat"] = summary.mean_d_hat;
    j["sd_d_hat"] = summary.sd_d_hat;
    j["scaled_var"] = summary.scaled_var;
    j["asymptotic_var"] = summary.asymptotic_var;
    j["ks_distance"] = summary.ks_distance;
    return j;
}

void write_mc_outputs(const McConfig& config, const McSummary& summary) {
    if (!config.replicates_csv.empty()) {
        std::ofstream os(config.replicates_csv);
        if (!os) throw std::runtime_error("cannot open " + config.replicates_csv);
        os << "replicate,d_hat\n";
        char buf[64];
        for (std::size_t i = 0; i < summary.estimates.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g", summary.estimates[i]);
            os << i << ',' << buf << '\n';
        }
    }
    if (!config.summary_json.empty()) {
        std::ofstream os(config.summary_json);
        if (!os) throw std::runtime_error("cannot open " + config.summary_json);
        os << mc_summary_to_json(config, summary).dump(2) << '\n';
    }
}

}  // namespace wavemem
