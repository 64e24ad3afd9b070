#pragma once

// The presentation file format and report serialization. One self-describing
// JSON document (format_version 1) covers algebras, modules, operators and
// search corpus entries; serialization is canonical (sorted keys, canonical
// scalar strings, fixed indentation), so equal documents have equal bytes.
//
// Tensors are dense nested arrays c[i][j][k] with e_i o e_j = sum_k c_ij^k e_k;
// matrices are row-major. Scalars use the textual forms of scalar.hpp.
//
// Reserved component names routed to the module part (legal only when dim_M
// is present): ops "l", "r", "bullet", "H"; maps "alpha_M", "beta_M", "pi".
// Every other op is dim x dim x dim and every other map dim x dim.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bihom/check_report.hpp"
#include "bihom/presentation.hpp"

namespace bihom {

inline constexpr const char* kToolVersion = "bihom 1.0.0";
inline constexpr int kFormatVersion = 1;

struct Provenance {
    std::string construction;
    std::vector<std::string> inputs;  // content digests of the construction inputs
    bool operator==(const Provenance&) const = default;
};

struct PresentationDocument {
    AlgebraPresentation algebra;
    std::optional<BimodulePresentation> bimodule;  // algebra inside equals `algebra`
    std::optional<BilinearOp> cocycle;             // H
    std::optional<LinearMap> pi;
    std::optional<Provenance> provenance;

    bool has_module() const { return bimodule.has_value(); }
    TwistedRBInstance twisted_rb() const;
    GenNijInstance gen_nij() const;
};

PresentationDocument wrap(AlgebraPresentation p);
PresentationDocument wrap(BimodulePresentation b);
PresentationDocument wrap(TwistedRBInstance t);

nlohmann::json to_json(const PresentationDocument& doc);
PresentationDocument document_from_json(const nlohmann::json& j);

PresentationDocument parse_presentation(const std::string& text);
PresentationDocument load_presentation(const std::filesystem::path& path);
std::string serialize(const PresentationDocument& doc);
void save(const PresentationDocument& doc, const std::filesystem::path& path);

// Small standalone documents for a single map or vector.
LinearMap parse_map_document(const std::string& text);
std::string serialize_map_document(const LinearMap& m);
LinearMap load_map(const std::filesystem::path& path);
Vector parse_vector_document(const std::string& text);
std::string serialize_vector_document(const Vector& v);
Vector load_vector(const std::filesystem::path& path);

// FNV-1a 64-bit over the canonical serialization, as 16 hex digits. Used for
// content addressing of corpus files and construction provenance.
std::string fnv1a64_hex(std::string_view bytes);
std::string digest(const PresentationDocument& doc);

struct ReportDocument {
    std::string tool_version = kToolVersion;
    std::string input_digest;
    std::vector<std::pair<std::string, CheckReport>> results;  // checker name -> report

    bool all_pass() const;
    bool any_prerequisite_failure() const;
};

nlohmann::json to_json(const ReportDocument& r);
std::string serialize(const ReportDocument& r);

}  // namespace bihom
