#include "tbcc/json_io.hpp"

#include <json.hpp>

#include "tbcc/errors.hpp"

namespace tbcc {

namespace {

using nlohmann::json;

json span_list_json(const SpanList& t) {
    json arr = json::array();
    for (const Span& s : t) arr.push_back(json::array({s.a, s.b}));
    return arr;
}

json matrix_rows_json(const BitMatrix& m) {
    json arr = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        arr.push_back(m.row(r).to_string());
    }
    return arr;
}

json encoder_json(const PolyMatrix& g) {
    json obj;
    obj["rows"] = g.rows();
    obj["cols"] = g.cols();
    obj["matrix"] = g.to_string();
    if (g.rows() == 1) obj["octal"] = octal_encode(g);
    obj["nu"] = metrics(g).nu;
    return obj;
}

json characteristic_json(const CharacteristicMatrix& cm) {
    SpanAnalysis analysis = analyze_spans(cm);
    json obj;
    obj["n0"] = cm.n0;
    obj["k0"] = cm.k0;
    obj["N"] = cm.N;
    obj["rows"] = matrix_rows_json(cm.x);
    obj["spans"] = span_list_json(cm.spans);
    obj["corollary_fast_path"] = cm.corollary_fast_path;
    obj["shift_repaired"] = cm.shift_repaired;
    obj["basic_spans"] = span_list_json(analysis.basic);
    obj["theta"] = analysis.theta;
    obj["symmetric_count"] = analysis.symmetric_count;
    obj["total_count"] = analysis.total_count;
    obj["basic_span_length"] = analysis.ell;
    obj["basic_span_length_formula"] = analysis.ell_formula;
    return obj;
}

json outcome_json(const CandidateOutcome& out) {
    json obj;
    obj["index"] = out.index;
    obj["variant"] = out.variant_index;
    obj["basic_starts"] = out.basic_starts;
    obj["generates"] = out.generates;
    obj["extractable"] = out.extractable;
    obj["span_length_sum"] = out.span_length_sum;
    if (out.generates && out.extractable) {
        obj["nu_selected"] = out.nu_selected;
        obj["nu_reduced"] = out.nu_reduced;
        obj["division"] = out.division;
        obj["shifts"] = out.shifts;
        obj["encoder"] = encoder_json(out.encoder);
        obj["reduced"] = encoder_json(out.reduced);
    }
    return obj;
}

json report_json(const ReductionReport& rep, bool include_outcomes) {
    json obj;
    obj["original"] = encoder_json(rep.original);
    obj["N"] = rep.N;
    obj["nu"] = rep.nu;
    obj["mode"] = rep.mode == VariantMode::kShiftSymmetric ? "symmetric"
                                                          : "full";
    obj["theta"] = rep.theta;
    obj["variant_count"] = rep.variant_count;
    obj["characteristic"] = characteristic_json(rep.characteristic);
    obj["bound"] = {{"max_n", rep.bound.max_n}, {"within", rep.bound.within}};
    obj["status"] = rep.reduced ? "reduced" : "exhausted";
    obj["found_valid"] = rep.found_valid;
    if (rep.found_valid) obj["best"] = outcome_json(rep.best);
    if (rep.reduced) {
        obj["nu_reduced"] = rep.best.nu_reduced;
        obj["shift_vector"] = rep.best.shifts;
    }
    obj["verification"] = rep.verification;
    if (include_outcomes) {
        json arr = json::array();
        for (const CandidateOutcome& out : rep.outcomes) {
            arr.push_back(outcome_json(out));
        }
        obj["outcomes"] = arr;
    }
    return obj;
}

}  // namespace

std::string characteristic_to_json(const CharacteristicMatrix& cm) {
    return characteristic_json(cm).dump(2);
}

CharacteristicMatrix characteristic_from_json(const std::string& text) {
    json obj = json::parse(text, nullptr, false);
    if (obj.is_discarded()) {
        throw ParseError("malformed characteristic JSON");
    }
    try {
        CharacteristicMatrix cm;
        cm.n0 = obj.at("n0").get<int>();
        cm.k0 = obj.at("k0").get<int>();
        cm.N = obj.at("N").get<int>();
        cm.corollary_fast_path = obj.at("corollary_fast_path").get<bool>();
        cm.shift_repaired = obj.at("shift_repaired").get<bool>();
        std::vector<std::string> rows;
        for (const auto& row : obj.at("rows")) {
            rows.push_back(row.get<std::string>());
        }
        cm.x = BitMatrix::from_strings(rows);
        for (const auto& s : obj.at("spans")) {
            cm.spans.push_back(Span{s.at(0).get<int>(), s.at(1).get<int>()});
        }
        if (static_cast<int>(cm.spans.size()) != cm.n() ||
            static_cast<int>(cm.x.rows()) != cm.n()) {
            throw ParseError("characteristic JSON has inconsistent sizes");
        }
        return cm;
    } catch (const json::exception& e) {
        throw ParseError(std::string{"characteristic JSON: "} + e.what());
    }
}

std::string reduction_report_to_json(const ReductionReport& rep,
                                     bool include_outcomes) {
    return report_json(rep, include_outcomes).dump(2);
}

std::string dual_report_to_json(const DualReport& rep,
                                bool include_outcomes) {
    json obj;
    obj["check"] = encoder_json(rep.check);
    obj["dual_encoder"] = encoder_json(rep.reciprocal);
    obj["search"] = report_json(rep.search, include_outcomes);
    obj["valid"] = rep.valid;
    if (rep.valid) {
        obj["selected"] = encoder_json(rep.selected);
        obj["reduced_dual"] = encoder_json(rep.reduced_dual);
        obj["reduced_check"] = encoder_json(rep.reduced_check);
    }
    return obj.dump(2);
}

std::string trellis_to_json(const TbTrellis& t) {
    json obj;
    obj["n0"] = t.n0;
    obj["k0"] = t.k0;
    obj["N"] = t.N;
    obj["nu"] = t.nu;
    obj["nu_i"] = t.nu_i;
    obj["states"] = t.state_count();
    json edges = json::array();
    for (const TrellisEdge& e : t.section_edges) {
        edges.push_back(json::array({e.from, e.input, e.to, e.output}));
    }
    obj["section_edges"] = edges;
    return obj.dump(2);
}

std::string simultaneous_report_to_json(const SimultaneousReport& rep) {
    json obj;
    obj["input"] = {{"g", rep.g_in.to_string()}, {"h", rep.h_in.to_string()}};
    obj["output"] = {{"g", rep.g_out.to_string()},
                     {"h", rep.h_out.to_string()}};
    obj["nu_before"] = rep.nu_before;
    obj["nu_after"] = rep.nu_after;
    obj["shift_vector"] = rep.shifts;
    json steps = json::array();
    for (const SimultaneousStep& st : rep.trace) {
        steps.push_back({{"op", st.op},
                         {"detail", st.detail},
                         {"g", st.g.to_string()},
                         {"h", st.h.to_string()},
                         {"shifts", st.shifts}});
    }
    obj["trace"] = steps;
    return obj.dump(2);
}

}  // namespace tbcc
