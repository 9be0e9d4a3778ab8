#include "dsa/harness.hpp"

#include "dsa/allocation.hpp"
#include "dsa/conflict_graph.hpp"
#include "dsa/version.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace dsa {

const std::string& sweep_variable_token(SweepVariable variable) {
    static const std::string tokens[] = {"n", "f", "rmax", "bmax", "none"};
    return tokens[static_cast<int>(variable)];
}

std::optional<SweepVariable> parse_sweep_variable(const std::string& token) {
    for (SweepVariable v : {SweepVariable::N, SweepVariable::F, SweepVariable::RadiusMax,
                            SweepVariable::BandwidthMax, SweepVariable::None}) {
        if (sweep_variable_token(v) == token) return v;
    }
    return std::nullopt;
}

void validate(const SweepSpec& spec) {
    if (spec.runs < 1) throw std::invalid_argument("sweep spec: runs must be >= 1");
    if (spec.strategies.empty()) {
        throw std::invalid_argument("sweep spec: at least one strategy required");
    }
    if (spec.variable == SweepVariable::None) {
        if (!spec.values.empty()) {
            throw std::invalid_argument("sweep spec: variable 'none' takes no values");
        }
    } else {
        if (spec.values.empty()) throw std::invalid_argument("sweep spec: values must be non-empty");
        for (std::size_t k = 0; k + 1 < spec.values.size(); ++k) {
            if (!(spec.values[k] < spec.values[k + 1])) {
                throw std::invalid_argument("sweep spec: values must be strictly increasing");
            }
        }
    }
    for (double v : spec.values) validate(instantiate_params(spec, v));
    if (spec.variable == SweepVariable::None) validate(spec.base);
}

GenParams instantiate_params(const SweepSpec& spec, double value) {
    GenParams params = spec.base;
    switch (spec.variable) {
        case SweepVariable::N: params.n = static_cast<int>(std::llround(value)); break;
        case SweepVariable::F: params.f = static_cast<int>(std::llround(value)); break;
        case SweepVariable::RadiusMax: params.radius.hi = value; break;
        case SweepVariable::BandwidthMax:
            params.bandwidth.hi = static_cast<int>(std::llround(value));
            break;
        case SweepVariable::None: break;
    }
    return params;
}

std::vector<MetricsReport> run_trial(const Scenario& scenario,
                                     const std::vector<SortStrategy>& strategies,
                                     RandomStream& sort_rng) {
    const ConflictGraph graph = build_conflict_graph(scenario);
    std::vector<MetricsReport> reports;
    reports.reserve(strategies.size());
    for (SortStrategy strategy : strategies) {
        const Ordering order = sort_transmitters(scenario, graph, strategy, &sort_rng);
        const Allocation allocation = allocate(scenario, graph, order);
        MetricsReport report = compute_metrics(scenario, allocation);
        check_metric_identities(scenario, allocation, report);
        reports.push_back(std::move(report));
    }
    return reports;
}

namespace {

// Per-trial substream seeds. Purpose 0 drives scenario generation, purpose 1
// the Random-sort shuffle, keeping the generated network independent of the
// strategy list.
std::uint64_t trial_gen_seed(std::uint64_t master, std::size_t point, int trial) {
    return derive_seed(master, point, static_cast<std::uint64_t>(trial), 0);
}
std::uint64_t trial_sort_seed(std::uint64_t master, std::size_t point, int trial) {
    return derive_seed(master, point, static_cast<std::uint64_t>(trial), 1);
}

MetricStats aggregate(const std::vector<double>& samples) {
    MetricStats stats;
    const std::size_t n = samples.size();
    double sum = 0.0;
    for (double x : samples) sum += x;
    stats.mean = sum / static_cast<double>(n);
    if (n > 1) {
        double ss = 0.0;
        for (double x : samples) ss += (x - stats.mean) * (x - stats.mean);
        stats.stddev = std::sqrt(ss / static_cast<double>(n - 1));
    }
    return stats;
}

std::string format_number(double value) {
    char buf[32];
    // Integral values print without a decimal point; others use the shortest
    // representation that round-trips.
    if (value == std::floor(value) && std::abs(value) < 1e15) {
        auto [p, ec] = std::to_chars(buf, buf + sizeof(buf),
                                     static_cast<long long>(value));
        return std::string(buf, p);
    }
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, p);
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options) {
    validate(spec);

    const std::size_t points =
        spec.variable == SweepVariable::None ? 1 : spec.values.size();
    const std::size_t n_strategies = spec.strategies.size();

    int workers = options.workers;
    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers < 1) workers = 1;
    }

    SweepResult result;
    result.spec = spec;
    result.stats.resize(points);
    if (options.raw) {
        options.raw->clear();
        options.raw->resize(points);
    }

    for (std::size_t point = 0; point < points; ++point) {
        const double value = spec.values.empty() ? 0.0 : spec.values[point];
        const GenParams point_params = instantiate_params(spec, value);

        std::vector<std::vector<MetricsReport>> trials(spec.runs);
        std::atomic<int> next_trial{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;

        auto work = [&]() {
            for (;;) {
                const int trial = next_trial.fetch_add(1);
                if (trial >= spec.runs || failed.load()) return;
                try {
                    GenParams params = point_params;
                    params.seed = trial_gen_seed(spec.master_seed, point, trial);
                    const Scenario scenario = generate_scenario(params);
                    RandomStream sort_rng(trial_sort_seed(spec.master_seed, point, trial));
                    trials[trial] = run_trial(scenario, spec.strategies, sort_rng);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        };

        if (workers == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (int w = 0; w < workers; ++w) pool.emplace_back(work);
            for (std::thread& t : pool) t.join();
        }
        if (error) std::rethrow_exception(error);

        // Aggregation runs in trial order, so results do not depend on the
        // worker schedule.
        auto& point_stats = result.stats[point];
        point_stats.resize(n_strategies);
        std::vector<double> samples(spec.runs);
        for (std::size_t s = 0; s < n_strategies; ++s) {
            for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
                for (int trial = 0; trial < spec.runs; ++trial) {
                    samples[trial] = trials[trial][s].value(kAllMetrics[m]);
                }
                point_stats[s][m] = aggregate(samples);
            }
        }
        if (options.raw) (*options.raw)[point] = std::move(trials);
    }
    return result;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
    out << "sweep_variable,sweep_value,strategy,metric,mean,stddev,runs\n";
    const std::string& variable = sweep_variable_token(result.spec.variable);
    for (std::size_t point = 0; point < result.point_count(); ++point) {
        const std::string value = format_number(result.point_value(point));
        for (std::size_t s = 0; s < result.spec.strategies.size(); ++s) {
            for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
                const MetricStats& stats = result.stats[point][s][m];
                out << variable << ',' << value << ','
                    << strategy_token(result.spec.strategies[s]) << ','
                    << metric_token(kAllMetrics[m]) << ',' << format_number(stats.mean) << ','
                    << format_number(stats.stddev) << ',' << result.spec.runs << '\n';
            }
        }
    }
}

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream out;
    write_sweep_csv(result, out);
    return out.str();
}

std::string sweep_metadata_json(const SweepResult& result) {
    nlohmann::json doc;
    doc["artifact"] = kArtifactName;
    doc["version"] = kArtifactVersion;
    doc["rng"] = kRngName;
    doc["master_seed"] = result.spec.master_seed;
    doc["runs"] = result.spec.runs;
    doc["variable"] = sweep_variable_token(result.spec.variable);
    doc["values"] = result.spec.values;
    nlohmann::json strategies = nlohmann::json::array();
    for (SortStrategy s : result.spec.strategies) strategies.push_back(strategy_token(s));
    doc["strategies"] = std::move(strategies);
    const GenParams& base = result.spec.base;
    doc["base"] = {{"region",
                    {{"x_min", base.region.x_min},
                     {"x_max", base.region.x_max},
                     {"y_min", base.region.y_min},
                     {"y_max", base.region.y_max}}},
                   {"n", base.n},
                   {"f", base.f},
                   {"bandwidth", {base.bandwidth.lo, base.bandwidth.hi}},
                   {"radius", {base.radius.lo, base.radius.hi}}};
    return doc.dump(2) + "\n";
}

}  // namespace dsa
