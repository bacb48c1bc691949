#include "trigen/reports.hpp"

#include <sstream>

#include <json.hpp>

namespace trigen {

int minor_growth_bound(const Graph& h, int r) {
    return h.edge_count() + 3 * (r - rank(h));
}

std::string BoundReport::to_tsv() const {
    std::ostringstream out;
    out << "code\trank\tedges\tbound\tslack\tbound_prism\tslack_prism\n";
    for (const BoundRecord& r : records) {
        out << r.code << '\t' << r.rank << '\t' << r.edges << '\t' << r.bound_general << '\t'
            << r.slack_general << '\t';
        if (r.bound_prism) out << *r.bound_prism << '\t' << *r.slack_prism;
        else out << "-\t-";
        out << '\n';
    }
    return out.str();
}

namespace {

nlohmann::json bound_record_json(const BoundRecord& r) {
    nlohmann::json j{{"code", r.code},   {"rank", r.rank},
                     {"edges", r.edges}, {"bound", r.bound_general},
                     {"slack", r.slack_general}};
    if (r.bound_prism) {
        j["bound_prism"] = *r.bound_prism;
        j["slack_prism"] = *r.slack_prism;
    }
    return j;
}

nlohmann::json mader_record_json(const MaderRecord& r) {
    return nlohmann::json{{"code", r.code},         {"rank", r.rank},
                          {"edges", r.edges},       {"limit", r.limit},
                          {"equality", r.equality}, {"is_k3p", r.is_k3p}};
}

} // namespace

std::string BoundReport::to_json() const {
    nlohmann::json j;
    j["seed_rank"] = seed_rank;
    j["seed_edges"] = seed_edges;
    j["prism_seed"] = prism_seed;
    j["violations"] = nlohmann::json::array();
    for (const BoundRecord& r : violations) j["violations"].push_back(bound_record_json(r));
    j["max_edges_by_rank"] = nlohmann::json::object();
    for (const auto& [r, m] : max_edges_by_rank) j["max_edges_by_rank"][std::to_string(r)] = m;
    j["records"] = nlohmann::json::array();
    for (const BoundRecord& r : records) j["records"].push_back(bound_record_json(r));
    return j.dump(2);
}

std::string MaderReport::to_tsv() const {
    std::ostringstream out;
    out << "code\trank\tedges\tlimit\tequality\tis_k3p\n";
    for (const MaderRecord& r : records)
        out << r.code << '\t' << r.rank << '\t' << r.edges << '\t' << r.limit << '\t'
            << (r.equality ? 1 : 0) << '\t' << (r.is_k3p ? 1 : 0) << '\n';
    return out.str();
}

std::string MaderReport::to_json() const {
    nlohmann::json j;
    j["records"] = nlohmann::json::array();
    for (const MaderRecord& r : records) j["records"].push_back(mader_record_json(r));
    j["bound_violations"] = nlohmann::json::array();
    for (const MaderRecord& r : bound_violations)
        j["bound_violations"].push_back(mader_record_json(r));
    j["equality_exceptions"] = nlohmann::json::array();
    for (const MaderRecord& r : equality_exceptions)
        j["equality_exceptions"].push_back(mader_record_json(r));
    j["equality_codes"] = equality_codes;
    return j.dump(2);
}

std::string DiracReport::to_tsv() const {
    std::ostringstream out;
    out << "rank\t" << rank << "\ncount_all\t" << count_all << "\nmatched\t"
        << (matched() ? 1 : 0) << '\n';
    for (const std::string& c : prism_free_codes) out << "prism_free\t" << c << '\n';
    for (const std::string& c : missing) out << "missing\t" << c << '\n';
    for (const std::string& c : unexpected) out << "unexpected\t" << c << '\n';
    return out.str();
}

std::string DiracReport::to_json() const {
    nlohmann::json j{{"rank", rank},
                     {"count_all", count_all},
                     {"matched", matched()},
                     {"catalog", catalog_codes},
                     {"prism_free", prism_free_codes},
                     {"missing", missing},
                     {"unexpected", unexpected}};
    return j.dump(2);
}

} // namespace trigen
