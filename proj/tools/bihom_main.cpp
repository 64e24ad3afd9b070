// bihom command-line tool: verify presentations against named axiom systems,
// run constructions, and search small fields for witness examples.
//
// Exit codes: 0 all checks pass, 1 check failure, 2 usage/parse error,
// 3 precondition failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "bihom/constructions.hpp"
#include "bihom/io.hpp"
#include "bihom/search.hpp"

namespace fs = std::filesystem;
using namespace bihom;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrerequisite = 3;

std::string infer_checker(const PresentationDocument& doc) {
    if (doc.algebra.kind_claim) return *doc.algebra.kind_claim;
    if (doc.has_module()) {
        if (doc.cocycle && doc.pi) return "twisted_rb";
        if (doc.cocycle) return "hochschild_2cocycle";
        if (doc.bimodule->bullet) return "bimodule_algebra";
        return "bimodule";
    }
    const auto& a = doc.algebra;
    const bool has_ab = a.has_map("alpha") && a.has_map("beta");
    if (a.has_op("prec") && a.has_op("succ") && a.has_op("vee"))
        return has_ab ? "bihom_ns" : "ns";
    if (a.has_op("prec") && a.has_op("succ") && a.has_op("dot")) return "bihom_tridendriform";
    if (a.has_op("mu") && a.has_map("sigma")) return "gen_nijenhuis";
    if (a.has_op("mu") && a.has_map("N")) return "nijenhuis";
    if (a.has_op("mu") && a.has_map("R")) return "reynolds";
    if (a.has_op("mu")) return "bihom_associative";
    throw ValidationError("cannot infer a checker for this document; pass --check");
}

SearchBase candidate_of(const PresentationDocument& doc) {
    if (doc.has_module()) return ModuleSearchBase{*doc.bimodule, doc.cocycle, doc.pi};
    return doc.algebra;
}

void apply_renames(PresentationDocument& doc, const std::vector<std::string>& renames) {
    for (const auto& spec : renames) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) throw ValidationError("--rename wants from=to, got '" + spec + "'");
        const std::string from = spec.substr(0, eq), to = spec.substr(eq + 1);
        auto it = doc.algebra.ops.find(from);
        if (it == doc.algebra.ops.end()) throw MissingComponentError("no op '" + from + "' to rename");
        if (doc.algebra.ops.count(to)) throw ValidationError("op '" + to + "' already present");
        BilinearOp op = it->second;
        doc.algebra.ops.erase(it);
        doc.algebra.ops.emplace(to, std::move(op));
    }
}

int cmd_verify(const std::string& path, std::vector<std::string> checkers,
               const std::vector<std::string>& renames, const std::string& report_path) {
    PresentationDocument doc = load_presentation(path);
    apply_renames(doc, renames);
    if (checkers.empty()) checkers.push_back(infer_checker(doc));

    ReportDocument report;
    report.input_digest = digest(doc);
    SearchBase candidate = candidate_of(doc);
    for (const auto& name : checkers) report.results.emplace_back(name, run_checker(name, candidate));

    std::cout << serialize(report);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw Error("cannot write '" + report_path + "'");
        out << serialize(report);
    }
    if (report.any_prerequisite_failure()) return kExitPrerequisite;
    return report.all_pass() ? kExitPass : kExitCheckFailure;
}

void write_output(const PresentationDocument& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << serialize(doc);
    } else {
        save(doc, out_path);
    }
}

int finish_construction(const AlgebraPresentation& output, const CheckReport& verification,
                        const Provenance& provenance, const std::string& out_path) {
    PresentationDocument doc = wrap(output);
    doc.provenance = provenance;
    write_output(doc, out_path);
    std::cerr << "verification: " << (verification.pass ? "pass" : "FAIL (" + verification.failed_axiom + ")")
              << "\n";
    return verification.pass ? kExitPass : kExitCheckFailure;
}

int cmd_construct(const std::string& name, const std::string& input, const std::string& out_path,
                  const std::string& alpha_path, const std::string& beta_path,
                  const std::string& vector_path) {
    PresentationDocument doc = load_presentation(input);

    if (name == "star_sum") {
        AlgebraPresentation out;
        out.dim = doc.algebra.dim;
        out.field = doc.algebra.field;
        out.ops.emplace("mu", star_sum(doc.algebra));
        if (doc.algebra.has_map("alpha")) out.maps.emplace("alpha", doc.algebra.map("alpha"));
        if (doc.algebra.has_map("beta")) out.maps.emplace("beta", doc.algebra.map("beta"));
        PresentationDocument in_doc = wrap(doc.algebra);
        Provenance p{"star_sum", {digest(in_doc)}};
        CheckReport verification =
            out.has_map("alpha") && out.has_map("beta") ? check_bihom_associative(out) : CheckReport::passed();
        return finish_construction(out, verification, p, out_path);
    }
    if (name == "ns_to_bhas") {
        NsCharacterization ch = ns_to_bhas_with_bimodule(doc.algebra);
        PresentationDocument out = wrap(ch.bimodule);
        PresentationDocument in_doc = wrap(doc.algebra);
        out.provenance = Provenance{"ns_to_bhas", {digest(in_doc)}};
        write_output(out, out_path);
        const bool ok = ch.bhas_report.pass && ch.bimodule_report.pass;
        std::cerr << "verification: " << (ok ? "pass" : "FAIL") << "\n";
        return ok ? kExitPass : kExitCheckFailure;
    }
    if (name == "yau_twist") {
        if (alpha_path.empty() || beta_path.empty())
            throw ValidationError("yau_twist needs --alpha and --beta map files");
        LinearMap a = load_map(alpha_path);
        LinearMap b = load_map(beta_path);
        ConstructionResult r = yau_twist_ns(doc.algebra, a, b);
        return finish_construction(r.output, r.verification, r.provenance, out_path);
    }
    if (name == "split_null_extension") {
        if (!doc.has_module()) throw MissingComponentError("split_null_extension needs a module document");
        ConstructionResult r = split_null_extension(*doc.bimodule);
        return finish_construction(r.output, r.verification, r.provenance, out_path);
    }
    if (name == "tridend_embed_ns") {
        ConstructionResult r = tridend_embed_ns(doc.algebra);
        return finish_construction(r.output, r.verification, r.provenance, out_path);
    }
    if (name == "ns_from_twisted_rb" || name == "functor_G") {
        ConstructionResult r = name == "functor_G" ? functor_G(doc.twisted_rb())
                                                   : ns_from_twisted_rb(doc.twisted_rb());
        return finish_construction(r.output, r.verification, r.provenance, out_path);
    }
    if (name == "cocycle_from_ns") {
        CocycleFromNs c = cocycle_from_ns(doc.algebra);
        PresentationDocument out = wrap(c.bimodule);
        out.cocycle = c.cocycle;
        PresentationDocument in_doc = wrap(doc.algebra);
        out.provenance = Provenance{"cocycle_from_ns", {digest(in_doc)}};
        write_output(out, out_path);
        std::cerr << "verification: " << (c.report.pass ? "pass" : "FAIL (" + c.report.failed_axiom + ")")
                  << "\n";
        return c.report.pass ? kExitPass : kExitCheckFailure;
    }
    if (name == "functor_F") {
        FunctorFResult r = functor_F(doc.algebra);
        PresentationDocument out = wrap(r.instance);
        PresentationDocument in_doc = wrap(doc.algebra);
        out.provenance = Provenance{"functor_F", {digest(in_doc)}};
        write_output(out, out_path);
        std::cerr << "verification: "
                  << (r.verification.pass ? "pass" : "FAIL (" + r.verification.failed_axiom + ")") << "\n";
        return r.verification.pass ? kExitPass : kExitCheckFailure;
    }
    if (name == "ns_from_gen_nijenhuis") {
        ConstructionResult r = ns_from_gen_nijenhuis(doc.gen_nij());
        return finish_construction(r.output, r.verification, r.provenance, out_path);
    }
    if (name == "perturbation_operators") {
        if (vector_path.empty()) throw ValidationError("perturbation_operators needs --vector");
        Vector a = load_vector(vector_path);
        PerturbationOperators ops = perturbation_operators(doc.algebra, a);
        AlgebraPresentation out = doc.algebra;
        out.maps.insert_or_assign("N1", ops.n1);
        out.maps.insert_or_assign("N2", ops.n2);
        out.kind_claim.reset();
        PresentationDocument in_doc = wrap(doc.algebra);
        Provenance p{"perturbation_operators", {digest(in_doc)}};
        const bool ok = ops.cor1.specialized.pass && ops.cor2.specialized.pass;
        PresentationDocument out_doc = wrap(out);
        out_doc.provenance = p;
        write_output(out_doc, out_path);
        std::cerr << "verification: " << (ok ? "pass" : "FAIL") << "\n";
        return ok ? kExitPass : kExitCheckFailure;
    }
    throw ValidationError("unknown construction '" + name + "'");
}

int cmd_search(const std::string& spec_path, std::optional<std::uint64_t> seed_override,
               std::string out_dir, std::uint64_t limit) {
    std::ifstream in(spec_path);
    if (!in) throw ParseError("cannot open '" + spec_path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    SearchSpec spec = parse_search_spec(text);
    if (seed_override) spec.seed = *seed_override;

    if (out_dir.empty()) {
        const char* env = std::getenv("BIHOM_CORPUS_ROOT");
        out_dir = env ? env : "corpus";
    }

    std::uint64_t evaluated = 0, passing = 0;
    std::vector<CorpusEntry> witnesses;
    const std::string spec_digest = spec.digest();
    enumerate(spec, [&](std::uint64_t index, const SearchBase& candidate) {
        ++evaluated;
        if (!run_checker(spec.target, candidate).pass) return true;
        ++passing;
        CorpusEntry entry;
        entry.value = candidate;
        entry.spec_digest = spec_digest;
        entry.candidate_index = index;
        for (const auto& name : checker_names()) {
            try {
                entry.verdicts[name] = run_checker(name, candidate).pass;
            } catch (const MissingComponentError&) {
            }
        }
        witnesses.push_back(std::move(entry));
        return limit == 0 || passing < limit;
    });

    const fs::path dir = fs::path(out_dir) / spec.target;
    fs::create_directories(dir);
    for (const auto& entry : witnesses) {
        const std::string bytes = serialize_corpus_entry(entry);
        const fs::path file = dir / (fnv1a64_hex(bytes) + ".json");
        std::ofstream out(file);
        if (!out) throw Error("cannot write '" + file.string() + "'");
        out << bytes;
    }
    std::cout << "evaluated=" << evaluated << " pass=" << passing
              << " fail=" << (evaluated - passing) << " written=" << witnesses.size() << " dir="
              << dir.string() << "\n";
    return kExitPass;
}

int cmd_canon(const std::string& path, const std::string& out_path) {
    PresentationDocument doc = load_presentation(path);
    write_output(doc, out_path);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bihom: exact verification of BiHom-type algebra presentations"};
    app.require_subcommand(1);

    std::string file, report_path, out_path, construction, alpha_path, beta_path, vector_path;
    std::vector<std::string> checkers, renames;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    std::uint64_t limit = 0;

    auto* verify = app.add_subcommand("verify", "run axiom checkers on a presentation file");
    verify->add_option("file", file)->required();
    verify->add_option("--check", checkers, "checker name (repeatable; inferred when absent)");
    verify->add_option("--rename", renames, "rename an op before checking, e.g. dot=vee");
    verify->add_option("--report", report_path, "also write the report document here");

    auto* construct = app.add_subcommand("construct", "run a named construction");
    construct->add_option("name", construction)->required();
    construct->add_option("input", file)->required();
    construct->add_option("-o,--out", out_path, "output presentation file (stdout when absent)");
    construct->add_option("--alpha", alpha_path, "map document for the first endomorphism");
    construct->add_option("--beta", beta_path, "map document for the second endomorphism");
    construct->add_option("--vector", vector_path, "vector document (perturbation_operators)");

    auto* search = app.add_subcommand("search", "enumerate or sample candidates from a spec file");
    search->add_option("spec", file)->required();
    search->add_option("--seed", seed, "override the spec seed");
    search->add_option("--out-dir", out_dir, "corpus root (default $BIHOM_CORPUS_ROOT or ./corpus)");
    search->add_option("--limit", limit, "stop after this many witnesses (0 = no limit)");

    auto* canon = app.add_subcommand("canon", "parse a document and emit its canonical form");
    canon->add_option("file", file)->required();
    canon->add_option("-o,--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(file, checkers, renames, report_path);
        if (construct->parsed())
            return cmd_construct(construction, file, out_path, alpha_path, beta_path, vector_path);
        if (search->parsed()) return cmd_search(file, seed, out_dir, limit);
        if (canon->parsed()) return cmd_canon(file, out_path);
    } catch (const PrerequisiteFailedError& e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return kExitPrerequisite;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
