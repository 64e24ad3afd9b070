#include "bihom/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace bihom {

using nlohmann::json;

namespace {

// Required components per recognized kind claim.
struct KindSpec {
    std::vector<std::string> ops, maps;
    bool module = false, needs_bullet = false, needs_cocycle = false, needs_pi = false;
};

const std::map<std::string, KindSpec>& kind_table() {
    static const std::map<std::string, KindSpec> table = {
        {"bihom_associative", {{"mu"}, {"alpha", "beta"}}},
        {"ns", {{"prec", "succ", "vee"}, {}}},
        {"bihom_ns", {{"prec", "succ", "vee"}, {"alpha", "beta"}}},
        {"bihom_tridendriform", {{"prec", "succ", "dot"}, {"alpha", "beta"}}},
        {"nijenhuis", {{"mu"}, {"alpha", "beta", "N"}}},
        {"reynolds", {{"mu"}, {"alpha", "beta", "R"}}},
        {"gen_nijenhuis", {{"mu"}, {"alpha", "beta", "sigma", "gamma", "tau", "delta", "N"}}},
        {"bimodule", {{"mu"}, {"alpha", "beta"}, true}},
        {"bimodule_algebra", {{"mu"}, {"alpha", "beta"}, true, true}},
        {"hochschild_2cocycle", {{"mu"}, {"alpha", "beta"}, true, false, true}},
        {"twisted_rb", {{"mu"}, {"alpha", "beta"}, true, false, true, true}},
    };
    return table;
}

bool is_module_op(const std::string& name) {
    return name == "l" || name == "r" || name == "bullet" || name == "H";
}
bool is_module_map(const std::string& name) {
    return name == "alpha_M" || name == "beta_M" || name == "pi";
}

Scalar scalar_from_json(const json& v, const FieldDescriptor& f) {
    if (v.is_string()) return Scalar::parse(v.get<std::string>(), f);
    if (v.is_number_integer()) return Scalar::of_int(v.get<long>(), f);
    throw ParseError("scalar entries must be strings or integers, got " + v.dump());
}

json tensor_to_json(const BilinearOp& op) {
    json out = json::array();
    for (int i = 0; i < op.dim_a(); ++i) {
        json plane = json::array();
        for (int j = 0; j < op.dim_b(); ++j) {
            json row = json::array();
            for (int k = 0; k < op.dim_out(); ++k) row.push_back(op.at(i, j, k).str());
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

BilinearOp tensor_from_json(const json& j, const FieldDescriptor& f, int da, int db, int dout,
                            const std::string& what) {
    if (!j.is_array() || j.size() != static_cast<size_t>(da))
        throw ValidationError(what + " must be a " + std::to_string(da) + "-element array");
    BilinearOp op(f, da, db, dout);
    for (int i = 0; i < da; ++i) {
        const json& plane = j[static_cast<size_t>(i)];
        if (!plane.is_array() || plane.size() != static_cast<size_t>(db))
            throw ValidationError(what + " row " + std::to_string(i) + " has the wrong length");
        for (int jj = 0; jj < db; ++jj) {
            const json& row = plane[static_cast<size_t>(jj)];
            if (!row.is_array() || row.size() != static_cast<size_t>(dout))
                throw ValidationError(what + " entry [" + std::to_string(i) + "][" +
                                      std::to_string(jj) + "] has the wrong length");
            for (int k = 0; k < dout; ++k)
                op.at(i, jj, k) = scalar_from_json(row[static_cast<size_t>(k)], f);
        }
    }
    return op;
}

json matrix_to_json(const LinearMap& m) {
    json out = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        out.push_back(std::move(row));
    }
    return out;
}

LinearMap matrix_from_json(const json& j, const FieldDescriptor& f, int rows, int cols,
                           const std::string& what) {
    if (!j.is_array() || j.size() != static_cast<size_t>(rows))
        throw ValidationError(what + " must be a " + std::to_string(rows) + "-row matrix");
    LinearMap m(f, rows, cols);
    for (int r = 0; r < rows; ++r) {
        const json& row = j[static_cast<size_t>(r)];
        if (!row.is_array() || row.size() != static_cast<size_t>(cols))
            throw ValidationError(what + " row " + std::to_string(r) + " has the wrong length");
        for (int c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(row[static_cast<size_t>(c)], f);
    }
    return m;
}

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (int i = 0; i < v.dim(); ++i) out.push_back(v[i].str());
    return out;
}

void check_format_version(const json& j) {
    if (!j.contains("format_version") || !j["format_version"].is_number_integer() ||
        j["format_version"].get<int>() != kFormatVersion)
        throw ParseError("document must carry format_version " + std::to_string(kFormatVersion));
}

FieldDescriptor field_from_json(const json& j) {
    if (!j.contains("field") || !j["field"].is_string())
        throw ParseError("document must carry a string 'field'");
    return FieldDescriptor::parse(j["field"].get<std::string>());
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

void validate_kind_claim(const PresentationDocument& doc) {
    if (!doc.algebra.kind_claim) return;
    const auto& claim = *doc.algebra.kind_claim;
    auto it = kind_table().find(claim);
    if (it == kind_table().end())
        throw ValidationError("unknown kind_claim '" + claim + "'");
    const KindSpec& spec = it->second;
    for (const auto& name : spec.ops)
        if (!doc.algebra.has_op(name))
            throw ValidationError("kind '" + claim + "' requires op '" + name + "'");
    for (const auto& name : spec.maps)
        if (!doc.algebra.has_map(name))
            throw ValidationError("kind '" + claim + "' requires map '" + name + "'");
    if (spec.module && !doc.bimodule)
        throw ValidationError("kind '" + claim + "' requires a module part (dim_M)");
    if (spec.needs_bullet && (!doc.bimodule || !doc.bimodule->bullet))
        throw ValidationError("kind '" + claim + "' requires the op 'bullet'");
    if (spec.needs_cocycle && !doc.cocycle)
        throw ValidationError("kind '" + claim + "' requires the op 'H'");
    if (spec.needs_pi && !doc.pi) throw ValidationError("kind '" + claim + "' requires the map 'pi'");
}

}  // namespace

TwistedRBInstance PresentationDocument::twisted_rb() const {
    if (!bimodule) throw MissingComponentError("document has no module part");
    if (!cocycle) throw MissingComponentError("document has no cocycle H");
    if (!pi) throw MissingComponentError("document has no map pi");
    return TwistedRBInstance{*bimodule, *cocycle, *pi};
}

GenNijInstance PresentationDocument::gen_nij() const {
    return GenNijInstance{algebra,         algebra.map("sigma"), algebra.map("gamma"),
                          algebra.map("tau"), algebra.map("delta"), algebra.map("N")};
}

PresentationDocument wrap(AlgebraPresentation p) {
    PresentationDocument d;
    d.algebra = std::move(p);
    return d;
}

PresentationDocument wrap(BimodulePresentation b) {
    PresentationDocument d;
    d.algebra = b.algebra;
    d.bimodule = std::move(b);
    return d;
}

PresentationDocument wrap(TwistedRBInstance t) {
    PresentationDocument d;
    d.algebra = t.bimodule.algebra;
    d.cocycle = std::move(t.cocycle);
    d.pi = std::move(t.pi);
    d.bimodule = std::move(t.bimodule);
    return d;
}

json to_json(const PresentationDocument& doc) {
    json j;
    j["format_version"] = kFormatVersion;
    j["field"] = doc.algebra.field.str();
    j["dim"] = doc.algebra.dim;
    if (doc.algebra.kind_claim) j["kind_claim"] = *doc.algebra.kind_claim;

    json ops = json::object();
    for (const auto& [name, op] : doc.algebra.ops) ops[name] = tensor_to_json(op);
    json maps = json::object();
    for (const auto& [name, m] : doc.algebra.maps) maps[name] = matrix_to_json(m);

    if (doc.bimodule) {
        const auto& b = *doc.bimodule;
        j["dim_M"] = b.dim_m;
        ops["l"] = tensor_to_json(b.left_action);
        ops["r"] = tensor_to_json(b.right_action);
        if (b.bullet) ops["bullet"] = tensor_to_json(*b.bullet);
        maps["alpha_M"] = matrix_to_json(b.alpha_m);
        maps["beta_M"] = matrix_to_json(b.beta_m);
    }
    if (doc.cocycle) ops["H"] = tensor_to_json(*doc.cocycle);
    if (doc.pi) maps["pi"] = matrix_to_json(*doc.pi);

    j["ops"] = std::move(ops);
    j["maps"] = std::move(maps);
    if (doc.provenance) {
        json p;
        p["construction"] = doc.provenance->construction;
        p["inputs"] = doc.provenance->inputs;
        j["provenance"] = std::move(p);
    }
    return j;
}

PresentationDocument document_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("presentation document must be a JSON object");
    check_format_version(j);
    PresentationDocument doc;
    doc.algebra.field = field_from_json(j);
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("document must carry an integer 'dim'");
    doc.algebra.dim = j["dim"].get<int>();
    if (doc.algebra.dim <= 0) throw ValidationError("dim must be positive");

    std::optional<int> dim_m;
    if (j.contains("dim_M")) {
        if (!j["dim_M"].is_number_integer()) throw ParseError("dim_M must be an integer");
        dim_m = j["dim_M"].get<int>();
        if (*dim_m <= 0) throw ValidationError("dim_M must be positive");
    }

    if (j.contains("kind_claim")) {
        if (!j["kind_claim"].is_string()) throw ParseError("kind_claim must be a string");
        doc.algebra.kind_claim = j["kind_claim"].get<std::string>();
    }

    const FieldDescriptor& f = doc.algebra.field;
    const int n = doc.algebra.dim;

    std::optional<BilinearOp> l, r, bullet, cocycle;
    std::optional<LinearMap> alpha_m, beta_m, pi;

    if (j.contains("ops")) {
        if (!j["ops"].is_object()) throw ParseError("'ops' must be an object");
        for (const auto& [name, tensor] : j["ops"].items()) {
            if (is_module_op(name)) {
                if (!dim_m)
                    throw ValidationError("op '" + name + "' needs a module part (dim_M missing)");
                const int m = *dim_m;
                if (name == "l") l = tensor_from_json(tensor, f, n, m, m, "op 'l'");
                else if (name == "r") r = tensor_from_json(tensor, f, m, n, m, "op 'r'");
                else if (name == "bullet") bullet = tensor_from_json(tensor, f, m, m, m, "op 'bullet'");
                else cocycle = tensor_from_json(tensor, f, n, n, m, "op 'H'");
            } else {
                doc.algebra.ops.emplace(name, tensor_from_json(tensor, f, n, n, n, "op '" + name + "'"));
            }
        }
    }
    if (j.contains("maps")) {
        if (!j["maps"].is_object()) throw ParseError("'maps' must be an object");
        for (const auto& [name, matrix] : j["maps"].items()) {
            if (is_module_map(name)) {
                if (!dim_m)
                    throw ValidationError("map '" + name + "' needs a module part (dim_M missing)");
                const int m = *dim_m;
                if (name == "alpha_M") alpha_m = matrix_from_json(matrix, f, m, m, "map 'alpha_M'");
                else if (name == "beta_M") beta_m = matrix_from_json(matrix, f, m, m, "map 'beta_M'");
                else pi = matrix_from_json(matrix, f, n, m, "map 'pi'");
            } else {
                doc.algebra.maps.emplace(name, matrix_from_json(matrix, f, n, n, "map '" + name + "'"));
            }
        }
    }

    if (dim_m) {
        if (!l || !r || !alpha_m || !beta_m)
            throw ValidationError("module part needs ops l, r and maps alpha_M, beta_M");
        BimodulePresentation b(doc.algebra, *dim_m);
        b.left_action = std::move(*l);
        b.right_action = std::move(*r);
        b.alpha_m = std::move(*alpha_m);
        b.beta_m = std::move(*beta_m);
        b.bullet = std::move(bullet);
        doc.bimodule = std::move(b);
    }
    doc.cocycle = std::move(cocycle);
    doc.pi = std::move(pi);

    if (j.contains("provenance")) {
        const json& p = j["provenance"];
        if (!p.is_object() || !p.contains("construction") || !p.contains("inputs"))
            throw ParseError("provenance must carry 'construction' and 'inputs'");
        Provenance prov;
        prov.construction = p["construction"].get<std::string>();
        for (const auto& d : p["inputs"]) prov.inputs.push_back(d.get<std::string>());
        doc.provenance = std::move(prov);
    }

    doc.algebra.validate();
    if (doc.bimodule) doc.bimodule->validate();
    if (doc.cocycle && !doc.bimodule)
        throw ValidationError("op 'H' needs a module part");
    if (doc.pi && !doc.bimodule) throw ValidationError("map 'pi' needs a module part");
    validate_kind_claim(doc);
    return doc;
}

PresentationDocument parse_presentation(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    try {
        return document_from_json(j);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
}

PresentationDocument load_presentation(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
}

std::string serialize(const PresentationDocument& doc) { return dump_canonical(to_json(doc)); }

void save(const PresentationDocument& doc, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << serialize(doc);
}

LinearMap parse_map_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    check_format_version(j);
    FieldDescriptor f = field_from_json(j);
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("matrix"))
        throw ParseError("map document needs rows, cols and matrix");
    return matrix_from_json(j["matrix"], f, j["rows"].get<int>(), j["cols"].get<int>(), "matrix");
}

std::string serialize_map_document(const LinearMap& m) {
    json j;
    j["format_version"] = kFormatVersion;
    j["field"] = m.field().str();
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["matrix"] = matrix_to_json(m);
    return dump_canonical(j);
}

LinearMap load_map(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_map_document(ss.str());
}

Vector parse_vector_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    check_format_version(j);
    FieldDescriptor f = field_from_json(j);
    if (!j.contains("dim") || !j.contains("coords")) throw ParseError("vector document needs dim and coords");
    const int n = j["dim"].get<int>();
    const json& coords = j["coords"];
    if (!coords.is_array() || coords.size() != static_cast<size_t>(n))
        throw ValidationError("coords must have length dim");
    Vector v(f, n);
    for (int i = 0; i < n; ++i) v[i] = scalar_from_json(coords[static_cast<size_t>(i)], f);
    return v;
}

std::string serialize_vector_document(const Vector& v) {
    json j;
    j["format_version"] = kFormatVersion;
    j["field"] = v.field().str();
    j["dim"] = v.dim();
    j["coords"] = vector_to_json(v);
    return dump_canonical(j);
}

Vector load_vector(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_vector_document(ss.str());
}

std::string fnv1a64_hex(std::string_view bytes) {
    // FNV-1a, 64-bit: offset basis 0xcbf29ce484222325, prime 0x100000001b3.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* hexdigits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = hexdigits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string digest(const PresentationDocument& doc) { return fnv1a64_hex(serialize(doc)); }

bool ReportDocument::all_pass() const {
    for (const auto& [name, r] : results)
        if (!r.pass) return false;
    return true;
}

bool ReportDocument::any_prerequisite_failure() const {
    for (const auto& [name, r] : results)
        if (r.is_prerequisite_failure()) return true;
    return false;
}

json to_json(const ReportDocument& r) {
    json j;
    j["format_version"] = kFormatVersion;
    j["tool_version"] = r.tool_version;
    j["input_digest"] = r.input_digest;
    json results = json::object();
    for (const auto& [checker, report] : r.results) {
        json entry;
        entry["verdict"] = report.pass ? "pass" : "fail";
        if (!report.pass) {
            entry["failed_axiom"] = report.failed_axiom;
            entry["witness"] = report.witness;
            if (report.residual) entry["residual"] = vector_to_json(*report.residual);
        }
        results[checker] = std::move(entry);
    }
    j["results"] = std::move(results);
    return j;
}

std::string serialize(const ReportDocument& r) { return dump_canonical(to_json(r)); }

}  // namespace bihom
