#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "biplab/construction.hpp"

namespace biplab {

namespace detail {
extern const char* kDefaultConfigJson;
}

ConstructionParams ConstructionParams::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw std::runtime_error(std::string("params config: ") + ex.what());
    }

    ConstructionParams p;
    auto get = [&](const char* key, double& slot) {
        if (j.contains(key)) slot = j.at(key).get<double>();
    };
    get("C", p.C);
    get("alpha", p.alpha);
    get("c", p.c);
    get("c1", p.c1);
    get("c2", p.c2);
    get("Q_window", p.Q_window);
    get("gamma", p.gamma);
    get("eps", p.eps);
    get("K1", p.K1);
    get("K2", p.K2);
    get("K3", p.K3);
    get("K4", p.K4);
    get("K5", p.K5);
    if (j.contains("delta"))
        p.delta = j.at("delta").get<double>();
    else
        p.delta = p.alpha / 5.0;
    if (j.contains("eps") == false) p.eps = 4.0 * p.gamma;
    if (j.contains("retries")) p.retries = j.at("retries").get<std::uint64_t>();
    if (j.contains("seed")) p.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("claim_floors")) {
        p.claim_floors = j.at("claim_floors").get<std::vector<double>>();
        if (p.claim_floors.size() != 5)
            throw std::runtime_error("params config: claim_floors needs exactly 5 entries");
    }
    return p;
}

ConstructionParams ConstructionParams::defaults() {
    return from_json_text(detail::kDefaultConfigJson);
}

ConstructionParams ConstructionParams::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open params config: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

}  // namespace biplab
