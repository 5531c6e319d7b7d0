#include "dilates/report.hpp"

#include "dilates/version.hpp"

namespace dilates {

Json json_point(const Point& p) {
    Json arr = Json::array();
    for (Int c : p) arr.push_back(c);
    return arr;
}

Json json_points(const PointSet& a) {
    Json arr = Json::array();
    for (const Point& p : a.points()) arr.push_back(json_point(p));
    return arr;
}

Json json_matrix(const IntMatrix& m) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m(i, j));
        arr.push_back(std::move(row));
    }
    return arr;
}

PointSet point_set_from_json(const Json& j) {
    std::vector<Point> pts;
    int dim = 0;
    for (const Json& jp : j) {
        Point p;
        for (const Json& c : jp) p.push_back(c.get<Int>());
        dim = static_cast<int>(p.size());
        pts.push_back(std::move(p));
    }
    return PointSet(dim, std::move(pts));
}

Json json_bound_report(const BoundReport& rep) {
    Json out;
    out["q"] = rep.q;
    out["dim"] = rep.dim;
    out["rank"] = rep.rank;
    out["cardinality"] = rep.cardinality;
    out["coset_count"] = rep.coset_count;
    out["computed"] = rep.computed;
    Json structural;
    structural["line_cover"] = rep.line_cover ? Json(*rep.line_cover) : Json(nullptr);
    structural["line_direction"] =
        rep.line_direction ? json_point(*rep.line_direction) : Json(nullptr);
    structural["hyperplane_cover"] =
        rep.hyperplane_cover ? Json(*rep.hyperplane_cover) : Json(nullptr);
    structural["hyperplane_normal"] =
        rep.hyperplane_normal ? json_point(*rep.hyperplane_normal) : Json(nullptr);
    out["structural"] = std::move(structural);
    Json rows = Json::array();
    for (const BoundRow& row : rep.rows) {
        Json jr;
        jr["name"] = row.name;
        jr["verdict"] = verdict_name(row.verdict);
        jr["required"] = row.required ? Json(*row.required) : Json(nullptr);
        jr["slope"] = row.slope ? Json(*row.slope) : Json(nullptr);
        jr["slack"] = row.slack ? Json(*row.slack) : Json(nullptr);
        jr["conjectured"] = row.conjectured;
        jr["note"] = row.note;
        rows.push_back(std::move(jr));
    }
    out["rows"] = std::move(rows);
    return out;
}

Json json_reduction(const ReductionRecord& rec) {
    Json out;
    out["input"] = json_points(rec.input);
    out["anchor"] = json_point(rec.anchor);
    out["transform"] = json_matrix(rec.transform);
    out["det"] = rec.det;
    out["output"] = json_points(rec.output);
    return out;
}

Json json_dichotomy(const DichotomyVerdict& v) {
    Json out;
    out["part_index"] = v.part_index;
    out["residue"] = json_point(v.residue);
    out["part_size"] = v.part_size;
    out["quotient_fully_distributed"] = v.quotient_fully_distributed;
    out["growth_inequality"] = v.growth_inequality;
    out["sum_part_with_all"] = v.sum_part_with_all;
    out["sum_part_with_self"] = v.sum_part_with_self;
    out["min_part_size"] = v.min_part_size;
    out["holds"] = v.holds();
    return out;
}

Json json_construction(const ConstructionCheck& c) {
    Json out;
    out["family"] = "AN";
    out["d"] = c.d;
    out["N"] = c.n_param;
    out["q"] = c.q;
    out["cardinality"] = c.cardinality;
    out["rank"] = c.rank;
    out["computed"] = c.computed;
    out["upper_bound"] = c.upper_bound;
    out["exact_expected"] = c.exact_expected ? Json(*c.exact_expected) : Json(nullptr);
    out["ok"] = c.ok;
    return out;
}

Json json_extremal(const ExtremalRecord& rec) {
    Json out;
    out["min_value"] = rec.min_value;
    out["witness"] = json_points(rec.witness);
    out["witness_source"] = rec.witness_source;
    out["witness_rank"] = rec.witness_rank;
    out["witness_coset_count"] = rec.witness_coset_count;
    Json slack = Json::array();
    for (const SlackRow& row : rec.slack) {
        Json jr;
        jr["name"] = row.name;
        jr["slope"] = row.slope;
        jr["slack"] = row.slack;
        jr["conjectured"] = row.conjectured;
        slack.push_back(std::move(jr));
    }
    out["slack"] = std::move(slack);
    out["subsets_examined"] = rec.subsets_examined;
    out["rank_deficient"] = rec.rank_deficient;
    out["classes_examined"] = rec.classes_examined;
    out["injected_candidates"] = rec.injected_candidates;
    return out;
}

Json make_report(const std::string& command, const std::string& input_digest, Json parameters,
                 Json results) {
    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["tool"] = kToolName;
    doc["tool_version"] = kToolVersion;
    doc["command"] = command;
    if (!input_digest.empty()) doc["input_digest"] = input_digest;
    doc["parameters"] = std::move(parameters);
    doc["results"] = std::move(results);
    return doc;
}

std::string render_report(const Json& doc) { return doc.dump(2) + "\n"; }

std::string witness_json(const PointSet& a, Json extra) {
    Json doc;
    doc["witness"] = json_points(a);
    doc["dim"] = a.dim();
    doc["cardinality"] = a.size();
    doc["detail"] = std::move(extra);
    return doc.dump(2);
}

}  // namespace dilates
