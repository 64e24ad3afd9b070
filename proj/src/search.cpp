#include "bihom/search.hpp"

namespace bihom {

using nlohmann::json;

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    if (bound == 0) throw Error("next_below(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
        r = next();
    } while (r >= limit);
    return r % bound;
}

namespace {

struct EntrySlot {
    // Writable scalar slots of one unknown inside a materialized candidate.
    std::function<void(SearchBase&, const std::vector<Scalar>&, size_t offset)> write;
    std::uint64_t count = 0;
};

const AlgebraPresentation& algebra_of(const SearchBase& b) {
    if (const auto* a = std::get_if<AlgebraPresentation>(&b)) return *a;
    return std::get<ModuleSearchBase>(b).bimodule.algebra;
}

// Shape of one unknown within the base, as (rows, cols) for maps and
// (da, db, dout) for ops. Module names are only legal on module bases.
struct UnknownShape {
    bool is_op = false;
    int d1 = 0, d2 = 0, d3 = 0;  // op dims, or (rows, cols, unused) for maps
};

UnknownShape shape_of(const SearchBase& base, const Unknown& u) {
    const int n = algebra_of(base).dim;
    const auto* mod = std::get_if<ModuleSearchBase>(&base);
    const int m = mod ? mod->bimodule.dim_m : 0;
    auto module_only = [&](const char* what) {
        if (!mod) throw ValidationError(std::string("unknown '") + what + "' needs a module base");
    };
    if (u.kind == Unknown::Kind::Op) {
        if (u.name == "l") {
            module_only("l");
            return {true, n, m, m};
        }
        if (u.name == "r") {
            module_only("r");
            return {true, m, n, m};
        }
        if (u.name == "bullet") {
            module_only("bullet");
            return {true, m, m, m};
        }
        if (u.name == "H") {
            module_only("H");
            return {true, n, n, m};
        }
        return {true, n, n, n};
    }
    if (u.name == "alpha_M" || u.name == "beta_M") {
        module_only(u.name.c_str());
        return {false, m, m, 0};
    }
    if (u.name == "pi") {
        module_only("pi");
        return {false, n, m, 0};
    }
    return {false, n, n, 0};
}

std::uint64_t entries_of(const SearchBase& base, const Unknown& u) {
    if (u.shape == Unknown::Shape::ScalarTimesIdentity) {
        if (u.kind != Unknown::Kind::Map)
            throw ValidationError("ScalarTimesIdentity applies to maps only");
        UnknownShape s = shape_of(base, u);
        if (s.d1 != s.d2) throw ValidationError("ScalarTimesIdentity needs a square map");
        return 1;
    }
    UnknownShape s = shape_of(base, u);
    return s.is_op ? std::uint64_t(s.d1) * std::uint64_t(s.d2) * std::uint64_t(s.d3)
                   : std::uint64_t(s.d1) * std::uint64_t(s.d2);
}

void write_unknown(SearchBase& candidate, const Unknown& u, const std::vector<Scalar>& digits,
                   size_t offset) {
    const FieldDescriptor field = algebra_of(candidate).field;
    UnknownShape s = shape_of(candidate, u);
    auto* mod = std::get_if<ModuleSearchBase>(&candidate);
    AlgebraPresentation& alg =
        mod ? mod->bimodule.algebra : std::get<AlgebraPresentation>(candidate);

    if (u.kind == Unknown::Kind::Op) {
        BilinearOp op(field, s.d1, s.d2, s.d3);
        size_t pos = offset;
        for (int i = 0; i < s.d1; ++i)
            for (int j = 0; j < s.d2; ++j)
                for (int k = 0; k < s.d3; ++k) op.at(i, j, k) = digits[pos++];
        if (u.name == "l") mod->bimodule.left_action = std::move(op);
        else if (u.name == "r") mod->bimodule.right_action = std::move(op);
        else if (u.name == "bullet") mod->bimodule.bullet = std::move(op);
        else if (u.name == "H") mod->cocycle = std::move(op);
        else alg.ops.insert_or_assign(u.name, std::move(op));
        return;
    }

    LinearMap m(field, s.d1, s.d2);
    if (u.shape == Unknown::Shape::ScalarTimesIdentity) {
        for (int i = 0; i < s.d1; ++i) m.at(i, i) = digits[offset];
    } else {
        size_t pos = offset;
        for (int i = 0; i < s.d1; ++i)
            for (int j = 0; j < s.d2; ++j) m.at(i, j) = digits[pos++];
    }
    if (u.name == "alpha_M") mod->bimodule.alpha_m = std::move(m);
    else if (u.name == "beta_M") mod->bimodule.beta_m = std::move(m);
    else if (u.name == "pi") mod->pi = std::move(m);
    else alg.maps.insert_or_assign(u.name, std::move(m));
}

json unknown_to_json(const Unknown& u) {
    json j;
    j["kind"] = u.kind == Unknown::Kind::Op ? "op" : "map";
    j["name"] = u.name;
    j["shape"] = u.shape == Unknown::Shape::Free ? "free" : "scalar_times_identity";
    return j;
}

}  // namespace

void SearchSpec::validate() const {
    if (dim < 1 || dim > 3) throw ValidationError("search dim must be in 1..3");
    if (budget == 0) throw ValidationError("search budget must be positive");
    if (algebra_of(base).dim != dim) throw ValidationError("base dimension differs from spec dim");
    if (algebra_of(base).field != field) throw ValidationError("base field differs from spec field");
    if (pool.empty() && field.is_rationals())
        throw ValidationError("searches over QQ need an explicit scalar pool");
    for (const auto& s : pool)
        if (s.field() != field) throw ValidationError("pool scalar from the wrong field");
    if (unknowns.empty()) throw ValidationError("search needs at least one unknown");
    for (const auto& u : unknowns) entries_of(base, u);  // shape errors surface here
    if (mode == SearchMode::Exhaustive && candidate_count() > kExhaustiveCap)
        throw SpaceTooLargeError("exhaustive search beyond 2^24 candidates");
}

std::vector<Scalar> SearchSpec::effective_pool() const {
    if (!pool.empty()) return pool;
    std::vector<Scalar> all;
    for (int v = 0; v < field.modulus(); ++v) all.push_back(Scalar::of_int(v, field));
    return all;
}

std::uint64_t SearchSpec::entry_count() const {
    std::uint64_t total = 0;
    for (const auto& u : unknowns) total += entries_of(base, u);
    return total;
}

std::uint64_t SearchSpec::candidate_count() const {
    const std::uint64_t p = effective_pool().size();
    const std::uint64_t entries = entry_count();
    std::uint64_t count = 1;
    for (std::uint64_t e = 0; e < entries; ++e) {
        if (count > (std::uint64_t(1) << 62) / p) return std::uint64_t(1) << 63;
        count *= p;
    }
    return count;
}

bool SearchSpec::runs_exhaustively() const {
    if (mode == SearchMode::Exhaustive) return true;
    if (mode == SearchMode::Sample) return false;
    const std::uint64_t count = candidate_count();
    return count <= budget && count <= kExhaustiveCap;
}

std::string SearchSpec::digest() const {
    json j;
    j["field"] = field.str();
    j["dim"] = dim;
    j["target"] = target;
    j["base"] = to_json(document_of(base));
    json us = json::array();
    for (const auto& u : unknowns) us.push_back(unknown_to_json(u));
    j["unknowns"] = std::move(us);
    json pl = json::array();
    for (const auto& s : effective_pool()) pl.push_back(s.str());
    j["pool"] = std::move(pl);
    j["budget"] = budget;
    j["seed"] = seed;
    j["mode"] = mode == SearchMode::Auto ? "auto" : (mode == SearchMode::Exhaustive ? "exhaustive" : "sample");
    return fnv1a64_hex(j.dump());
}

const std::vector<std::string>& checker_names() {
    static const std::vector<std::string> names = {
        "bihom_associative", "ns",       "bihom_ns",        "bihom_tridendriform",
        "nijenhuis",         "reynolds", "gen_nijenhuis",   "bimodule",
        "bimodule_algebra",  "hochschild_2cocycle",         "twisted_rb"};
    return names;
}

CheckReport run_checker(const std::string& name, const SearchBase& candidate) {
    const auto* alg = std::get_if<AlgebraPresentation>(&candidate);
    const auto* mod = std::get_if<ModuleSearchBase>(&candidate);
    auto need_alg = [&]() -> const AlgebraPresentation& {
        if (!alg) throw MissingComponentError("checker '" + name + "' consumes an algebra presentation");
        return *alg;
    };
    auto need_mod = [&]() -> const ModuleSearchBase& {
        if (!mod) throw MissingComponentError("checker '" + name + "' consumes a module presentation");
        return *mod;
    };

    if (name == "bihom_associative") return check_bihom_associative(need_alg());
    if (name == "ns") return check_ns(need_alg());
    if (name == "bihom_ns") return check_bihom_ns(need_alg());
    if (name == "bihom_tridendriform") return check_bihom_tridendriform(need_alg());
    if (name == "nijenhuis") return check_nijenhuis(need_alg(), need_alg().map("N"));
    if (name == "reynolds") return check_reynolds(need_alg(), need_alg().map("R"));
    if (name == "gen_nijenhuis") {
        const auto& p = need_alg();
        GenNijInstance g{p, p.map("sigma"), p.map("gamma"), p.map("tau"), p.map("delta"), p.map("N")};
        return check_gen_nijenhuis(g);
    }
    if (name == "bimodule") return check_bimodule(need_mod().bimodule);
    if (name == "bimodule_algebra") return check_bimodule_algebra(need_mod().bimodule);
    if (name == "hochschild_2cocycle") {
        const auto& m = need_mod();
        if (!m.cocycle) throw MissingComponentError("cocycle check needs the op H");
        return check_hochschild_2cocycle(m.bimodule, *m.cocycle);
    }
    if (name == "twisted_rb") {
        const auto& m = need_mod();
        if (!m.cocycle || !m.pi) throw MissingComponentError("twisted_rb check needs H and pi");
        return check_twisted_rb(TwistedRBInstance{m.bimodule, *m.cocycle, *m.pi});
    }
    throw UnknownCheckerError("no registered checker named '" + name + "'");
}

void enumerate(const SearchSpec& spec,
               const std::function<bool(std::uint64_t, const SearchBase&)>& fn) {
    spec.validate();
    const std::vector<Scalar> pool = spec.effective_pool();
    const std::uint64_t psize = pool.size();
    const std::uint64_t entries = spec.entry_count();
    std::vector<Scalar> digits(entries, Scalar::zero(spec.field));

    auto materialize = [&](std::uint64_t index) {
        SearchBase candidate = spec.base;
        size_t offset = 0;
        for (const auto& u : spec.unknowns) {
            write_unknown(candidate, u, digits, offset);
            offset += entries_of(spec.base, u);
        }
        return fn(index, candidate);
    };

    if (spec.runs_exhaustively()) {
        const std::uint64_t count = spec.candidate_count();
        if (count > kExhaustiveCap) throw SpaceTooLargeError("exhaustive search beyond 2^24 candidates");
        std::vector<std::uint64_t> radix(entries, 0);
        for (std::uint64_t index = 0; index < count; ++index) {
            for (std::uint64_t e = 0; e < entries; ++e) digits[e] = pool[radix[e]];
            if (!materialize(index)) return;
            // last entry varies fastest
            for (std::uint64_t e = entries; e-- > 0;) {
                if (++radix[e] < psize) break;
                radix[e] = 0;
            }
        }
        return;
    }

    SplitMix64 rng(spec.seed);
    for (std::uint64_t index = 0; index < spec.budget; ++index) {
        for (std::uint64_t e = 0; e < entries; ++e) digits[e] = pool[rng.next_below(psize)];
        if (!materialize(index)) return;
    }
}

std::vector<CorpusEntry> search_witnesses(const SearchSpec& spec, const std::string& checker,
                                          std::uint64_t max_witnesses) {
    bool known = false;
    for (const auto& n : checker_names()) known = known || n == checker;
    if (!known) throw UnknownCheckerError("no registered checker named '" + checker + "'");

    std::vector<CorpusEntry> out;
    const std::string spec_digest = spec.digest();
    enumerate(spec, [&](std::uint64_t index, const SearchBase& candidate) {
        if (!run_checker(checker, candidate).pass) return true;
        CorpusEntry entry;
        entry.value = candidate;
        entry.spec_digest = spec_digest;
        entry.candidate_index = index;
        for (const auto& name : checker_names()) {
            try {
                entry.verdicts[name] = run_checker(name, candidate).pass;
            } catch (const MissingComponentError&) {
                // checker not applicable to this candidate shape
            }
        }
        out.push_back(std::move(entry));
        return max_witnesses == 0 || out.size() < max_witnesses;
    });
    return out;
}

PresentationDocument document_of(const SearchBase& value) {
    if (const auto* alg = std::get_if<AlgebraPresentation>(&value)) return wrap(*alg);
    const auto& m = std::get<ModuleSearchBase>(value);
    PresentationDocument doc = wrap(m.bimodule);
    doc.cocycle = m.cocycle;
    doc.pi = m.pi;
    return doc;
}

std::string serialize_corpus_entry(const CorpusEntry& entry) {
    json j;
    j["format_version"] = kFormatVersion;
    j["entry"] = to_json(document_of(entry.value));
    json verdicts = json::object();
    for (const auto& [name, pass] : entry.verdicts) verdicts[name] = pass ? "pass" : "fail";
    j["verdicts"] = std::move(verdicts);
    json discovery;
    discovery["spec_digest"] = entry.spec_digest;
    discovery["candidate_index"] = entry.candidate_index;
    j["discovery"] = std::move(discovery);
    return j.dump(2) + "\n";
}

SearchSpec parse_search_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("search spec must be a JSON object");
    for (const char* key : {"format_version", "field", "dim", "target", "base", "unknowns", "budget"})
        if (!j.contains(key)) throw ParseError(std::string("search spec needs '") + key + "'");

    SearchSpec spec;
    spec.field = FieldDescriptor::parse(j["field"].get<std::string>());
    spec.dim = j["dim"].get<int>();
    spec.target = j["target"].get<std::string>();

    PresentationDocument base = document_from_json(j["base"]);
    if (base.has_module()) {
        spec.base = ModuleSearchBase{*base.bimodule, base.cocycle, base.pi};
    } else {
        spec.base = base.algebra;
    }

    for (const auto& u : j["unknowns"]) {
        Unknown unknown;
        const std::string kind = u.at("kind").get<std::string>();
        if (kind == "op") unknown.kind = Unknown::Kind::Op;
        else if (kind == "map") unknown.kind = Unknown::Kind::Map;
        else throw ParseError("unknown kind '" + kind + "' (want op or map)");
        unknown.name = u.at("name").get<std::string>();
        if (u.contains("shape")) {
            const std::string shape = u["shape"].get<std::string>();
            if (shape == "free") unknown.shape = Unknown::Shape::Free;
            else if (shape == "scalar_times_identity") unknown.shape = Unknown::Shape::ScalarTimesIdentity;
            else throw ParseError("unknown shape '" + shape + "'");
        }
        spec.unknowns.push_back(std::move(unknown));
    }

    if (j.contains("pool"))
        for (const auto& s : j["pool"]) spec.pool.push_back(Scalar::parse(s.get<std::string>(), spec.field));
    spec.budget = j["budget"].get<std::uint64_t>();
    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("mode")) {
        const std::string mode = j["mode"].get<std::string>();
        if (mode == "auto") spec.mode = SearchMode::Auto;
        else if (mode == "exhaustive") spec.mode = SearchMode::Exhaustive;
        else if (mode == "sample") spec.mode = SearchMode::Sample;
        else throw ParseError("unknown mode '" + mode + "'");
    }
    spec.validate();
    return spec;
}

CorpusEntry parse_corpus_entry(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("entry") || !j.contains("verdicts") || !j.contains("discovery"))
        throw ParseError("corpus entry needs 'entry', 'verdicts' and 'discovery'");
    CorpusEntry entry;
    PresentationDocument doc = document_from_json(j["entry"]);
    if (doc.has_module()) {
        ModuleSearchBase m{*doc.bimodule, doc.cocycle, doc.pi};
        entry.value = std::move(m);
    } else {
        entry.value = doc.algebra;
    }
    for (const auto& [name, verdict] : j["verdicts"].items())
        entry.verdicts[name] = verdict.get<std::string>() == "pass";
    entry.spec_digest = j["discovery"]["spec_digest"].get<std::string>();
    entry.candidate_index = j["discovery"]["candidate_index"].get<std::uint64_t>();
    return entry;
}

}  // namespace bihom
