#include "dsa/scenario_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dsa {

using nlohmann::json;

std::string scenario_to_json(const Scenario& scenario) {
    json doc;
    doc["region"] = {{"x_min", scenario.region.x_min},
                     {"x_max", scenario.region.x_max},
                     {"y_min", scenario.region.y_min},
                     {"y_max", scenario.region.y_max}};
    doc["total_bandwidth"] = scenario.total_bandwidth;
    json txs = json::array();
    for (const Transmitter& t : scenario.transmitters) {
        txs.push_back({{"id", t.id},
                       {"x", t.x},
                       {"y", t.y},
                       {"bandwidth", t.bandwidth},
                       {"radius", t.radius}});
    }
    doc["transmitters"] = std::move(txs);
    return doc.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("scenario JSON parse error: ") + e.what());
    }
    Scenario scenario;
    try {
        const json& region = doc.at("region");
        scenario.region.x_min = region.at("x_min").get<double>();
        scenario.region.x_max = region.at("x_max").get<double>();
        scenario.region.y_min = region.at("y_min").get<double>();
        scenario.region.y_max = region.at("y_max").get<double>();
        scenario.total_bandwidth = doc.at("total_bandwidth").get<int>();
        for (const json& tx : doc.at("transmitters")) {
            Transmitter t;
            t.id = tx.at("id").get<TxId>();
            t.x = tx.at("x").get<double>();
            t.y = tx.at("y").get<double>();
            t.bandwidth = tx.at("bandwidth").get<int>();
            t.radius = tx.at("radius").get<double>();
            scenario.transmitters.push_back(t);
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("scenario JSON schema error: ") + e.what());
    }
    validate(scenario);
    return scenario;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return scenario_from_json(buf.str());
}

void save_scenario_file(const Scenario& scenario, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scenario file: " + path);
    out << scenario_to_json(scenario);
}

std::string metrics_to_json(const MetricsReport& report) {
    json doc;
    doc["fi"] = report.fi;
    doc["bu"] = report.bu;
    doc["ca"] = report.ca;
    doc["bc"] = report.bc;
    doc["tf"] = report.tf;
    return doc.dump(2) + "\n";
}

}  // namespace dsa
