#pragma once
// JSON serialization of every value the command-line front end emits or
// consumes.  All numbers are exact: integers as JSON integers, rationals as
// [numerator, denominator] pairs.  Emission uses ordered JSON objects so
// identical inputs produce byte-identical outputs.

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tropsing/census.hpp"
#include "tropsing/delta.hpp"
#include "tropsing/errors.hpp"
#include "tropsing/lattice.hpp"
#include "tropsing/polytope.hpp"
#include "tropsing/rational.hpp"
#include "tropsing/strata.hpp"
#include "tropsing/ultratrop.hpp"
#include "tropsing/vandermonde.hpp"

namespace tropsing {

using OrderedJson = nlohmann::ordered_json;

inline long long json_int(const Int& v) { return to_int64(v); }

inline OrderedJson rat_to_json(const Rat& r) {
    return OrderedJson::array({json_int(num(r)), json_int(den(r))});
}

inline OrderedJson vec_to_json(const VecI& v) {
    OrderedJson a = OrderedJson::array();
    for (const Int& x : v) a.push_back(json_int(x));
    return a;
}

inline OrderedJson vecq_to_json(const VecQ& v) {
    OrderedJson a = OrderedJson::array();
    for (const Rat& x : v) a.push_back(rat_to_json(x));
    return a;
}

inline OrderedJson bset_to_json(const BSet& b) {
    OrderedJson a = OrderedJson::array();
    for (const Int& x : b) a.push_back(json_int(x));
    return a;
}

inline OrderedJson support_to_json(const SupportSet& s) {
    OrderedJson j;
    j["dim"] = s.dim;
    OrderedJson pts = OrderedJson::array();
    for (const VecI& p : s.points) pts.push_back(vec_to_json(p));
    j["points"] = pts;
    return j;
}

inline OrderedJson polygon_to_json(const Polygon2& p) {
    OrderedJson j;
    OrderedJson verts = OrderedJson::array();
    for (const VecQ& v : p.verts) verts.push_back(vecq_to_json(v));
    j["vertices"] = verts;
    return j;
}

// ---------------------------------------------------------------------------
// Parsing (schema violations surface as SchemaError)
// ---------------------------------------------------------------------------

inline Int int_from_json(const OrderedJson& j) {
    if (!j.is_number_integer()) throw SchemaError("expected an integer, got " + j.dump());
    return Int(j.get<long long>());
}

inline Rat rat_from_json(const OrderedJson& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_array() && j.size() == 2)
        return Rat(Int(int_from_json(j[0]))) / Rat(Int(int_from_json(j[1])));
    throw SchemaError("expected an integer or [numerator, denominator], got " + j.dump());
}

inline SupportSet support_from_json(const OrderedJson& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
        throw SchemaError("support sets need the shape {\"dim\": d, \"points\": [[...]]}");
    if (!j["dim"].is_number_integer()) throw SchemaError("\"dim\" must be an integer");
    SupportSet s;
    s.dim = j["dim"].get<int>();
    if (!j["points"].is_array()) throw SchemaError("\"points\" must be an array");
    for (const OrderedJson& pj : j["points"]) {
        if (!pj.is_array()) throw SchemaError("each point must be an array of integers");
        VecI p;
        for (const OrderedJson& cj : pj) p.push_back(int_from_json(cj));
        s.points.push_back(std::move(p));
    }
    s.validate();
    return s;
}

inline SupportSet load_support_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open support file: " + path);
    OrderedJson j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("invalid JSON in " + path + ": " + e.what());
    }
    return support_from_json(j);
}

// Inline comma-separated exponent list for one-dimensional supports.
inline BSet bset_from_csv(const std::string& text) {
    if (text.empty()) throw SchemaError("empty exponent list");
    std::vector<Int> vals;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw SchemaError("malformed exponent list: '" + text + "'");
        try {
            vals.push_back(Int(cur));
        } catch (const std::exception&) {
            throw SchemaError("not an integer: '" + cur + "'");
        }
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else if ((c >= '0' && c <= '9') || c == '-' || c == '+') {
            cur.push_back(c);
        } else if (c == ' ') {
            continue;
        } else {
            throw SchemaError(std::string("unexpected character '") + c + "' in exponent list");
        }
    }
    flush();
    return make_bset(vals);
}

// Coefficient files: {"f1": [[exponent, coefficient], ...], "f2": [...]}
// with coefficients as integers or [numerator, denominator] pairs.
inline std::pair<CoeffMap, CoeffMap> coeffs_from_json(const OrderedJson& j) {
    if (!j.is_object() || !j.contains("f1") || !j.contains("f2"))
        throw SchemaError("coefficient files need the shape {\"f1\": [[b, c]...], \"f2\": [...]}");
    auto parse_side = [](const OrderedJson& side) {
        if (!side.is_array()) throw SchemaError("coefficient lists must be arrays");
        CoeffMap m;
        for (const OrderedJson& term : side) {
            if (!term.is_array() || term.size() != 2)
                throw SchemaError("each coefficient term must be [exponent, coefficient]");
            Int b = int_from_json(term[0]);
            Rat c = rat_from_json(term[1]);
            if (m.count(b)) throw DuplicatePoint("duplicate exponent " + b.str());
            m[b] = c;
        }
        return m;
    };
    return {parse_side(j["f1"]), parse_side(j["f2"])};
}

inline std::pair<CoeffMap, CoeffMap> load_coeffs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open coefficient file: " + path);
    OrderedJson j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("invalid JSON in " + path + ": " + e.what());
    }
    return coeffs_from_json(j);
}

// ---------------------------------------------------------------------------
// Report serialization
// ---------------------------------------------------------------------------

inline OrderedJson kind_to_json(const SingularityKind& k) {
    OrderedJson j;
    if (k.ordinary) {
        j["type"] = "ordinary";
        j["m"] = json_int(k.m);
    } else {
        j["type"] = "sparse";
        j["b1"] = bset_to_json(k.b1);
        j["b2"] = bset_to_json(k.b2);
    }
    return j;
}

inline OrderedJson census_to_json(const SingularityCensus& c) {
    OrderedJson j;
    OrderedJson entries = OrderedJson::array();
    for (const CensusEntry& e : c.entries) {
        OrderedJson ej;
        ej["kind"] = kind_to_json(e.kind);
        ej["count"] = json_int(e.count);
        ej["delta_each"] = json_int(e.kind.delta);
        ej["source"] = e.source;
        entries.push_back(std::move(ej));
    }
    j["entries"] = entries;
    j["nodes"] = json_int(c.nodes);
    j["total_delta"] = json_int(c.total_delta);
    j["newton_polygon"] = polygon_to_json(c.newton_polygon);
    return j;
}

inline OrderedJson strata_to_json(const StrataReport& r) {
    OrderedJson arr = OrderedJson::array();
    for (const StratumEntry& e : r.entries) {
        OrderedJson ej;
        ej["name"] = e.name;
        ej["exists"] = true;
        ej["condition"] = e.condition;
        if (e.has_degree) {
            ej["degree"] = json_int(e.degree);
            ej["degree_source"] = e.degree_source;
        } else {
            ej["degree"] = "UNKNOWN";
        }
        ej["transversal_type"] = kind_to_json(e.type);
        ej["delta"] = json_int(e.type.delta);
        ej["components"] = json_int(e.components);
        arr.push_back(std::move(ej));
    }
    return arr;
}

inline OrderedJson block_to_json(const TangencyBlock& b) {
    OrderedJson j;
    j["gamma"] = vec_to_json(b.gamma.coords);
    j["size"] = json_int(b.size);
    OrderedJson iota = OrderedJson::array();
    for (const Int& v : b.iota.values) iota.push_back(json_int(v));
    j["iota"] = iota;
    return j;
}

inline OrderedJson matrix_to_json(const std::vector<std::vector<Int>>& m) {
    OrderedJson rows = OrderedJson::array();
    for (const auto& row : m) {
        OrderedJson r = OrderedJson::array();
        for (const Int& x : row) r.push_back(json_int(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

// The tangency report of the projection; when dir_filter is nonempty only
// blocks whose image direction (the last two covector entries) matches are
// listed, while the scalar summaries always cover the whole curve.
inline OrderedJson utrop_to_json(const ThsumReport& rep, const std::vector<Int>& dir_filter) {
    OrderedJson j;
    OrderedJson blocks = OrderedJson::array();
    OrderedJson matrices = OrderedJson::array();
    for (const TangencyBlock& b : rep.blocks) {
        if (!dir_filter.empty() &&
            !(b.gamma.coords[1] == dir_filter[0] && b.gamma.coords[2] == dir_filter[1]))
            continue;
        blocks.push_back(block_to_json(b));
        matrices.push_back(matrix_to_json(b.kappa));
    }
    j["blocks"] = blocks;
    j["matrices"] = matrices;
    j["g_direct"] = json_int(rep.g_direct);
    j["g_closed"] = json_int(rep.g_closed);
    j["g_calibrated"] = json_int(rep.g_calibrated);
    j["g_used"] = rep.g_used;
    j["thsum_total"] = json_int(rep.total);
    return j;
}

inline OrderedJson witness_to_json(const DegeneracyWitness& w) {
    OrderedJson j;
    j["order"] = json_int(w.order);
    OrderedJson res = OrderedJson::array();
    for (const Int& r : w.residues) res.push_back(json_int(r));
    j["residues"] = res;
    j["exponents"] = bset_to_json(w.exponents);
    j["classification"] = w.classification;
    OrderedJson classes = OrderedJson::array();
    for (const auto& cls : w.classes) {
        OrderedJson c = OrderedJson::array();
        for (int i : cls) c.push_back(i);
        classes.push_back(std::move(c));
    }
    j["classes"] = classes;
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

inline OrderedJson sweep_to_json(const SweepReport& r) {
    OrderedJson j;
    j["checked"] = r.checked;
    j["degenerate"] = r.degenerate;
    j["confirmed"] = r.confirmed;
    OrderedJson cx = OrderedJson::array();
    for (const DegeneracyWitness& w : r.counterexamples) cx.push_back(witness_to_json(w));
    j["counterexamples"] = cx;
    return j;
}

inline OrderedJson delta_to_json(const DeltaResult& d) {
    OrderedJson j;
    j["delta"] = json_int(d.delta);
    j["milnor"] = json_int(d.milnor);
    OrderedJson js = OrderedJson::array();
    for (const Int& v : d.j_seq) js.push_back(json_int(v));
    j["j_sequence"] = js;
    return j;
}

inline OrderedJson error_to_json(const std::string& kind, const std::string& message) {
    OrderedJson j;
    OrderedJson e;
    e["kind"] = kind;
    e["message"] = message;
    j["error"] = e;
    return j;
}

} // namespace tropsing
