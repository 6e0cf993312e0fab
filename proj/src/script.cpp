#include "sigcheck/script.h"

#include "sigcheck/errors.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace sigcheck {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kFormat = "sigcheck-proof-script";
constexpr int kVersion = 1;

std::string fmt_num(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

// JSON helpers ------------------------------------------------------------

ordered_json radius_json(const Radius& r) {
    switch (r.symbol) {
        case Radius::Symbol::Literal: return r.value;
        case Radius::Symbol::P: return "p";
        case Radius::Symbol::OnePlusP: return "1+p";
        case Radius::Symbol::Q: return "q";
        case Radius::Symbol::OnePlusQ: return "1+q";
    }
    return r.value;
}

ordered_json class_json(const ClassSpec& c, bool with_label) {
    ordered_json j;
    if (with_label) j["label"] = c.label;
    j["weight"] = to_string(c.weight);
    j["annulus"] = ordered_json::array({radius_json(c.annulus.lo), radius_json(c.annulus.hi)});
    j["count"] = c.count;
    return j;
}

ordered_json composition_json(const Composition& c) { return ordered_json::array({c.n11, c.nhh, c.n1h}); }

class Reader {
public:
    explicit Reader(std::string where) : where_(std::move(where)) {}

    [[noreturn]] void fail(const std::string& field, const std::string& what) const {
        throw StructuralError(where_ + (field.empty() ? "" : "." + field), what);
    }

    const json& require(const json& obj, const std::string& key) const {
        if (!obj.is_object()) fail("", "expected an object");
        auto it = obj.find(key);
        if (it == obj.end()) fail(key, "missing field");
        return *it;
    }

    std::string string_field(const json& obj, const std::string& key, bool required = true) const {
        if (!obj.contains(key)) {
            if (required) fail(key, "missing field");
            return {};
        }
        const json& v = obj.at(key);
        if (!v.is_string()) fail(key, "expected a string");
        return v.get<std::string>();
    }

    double number(const json& v, const std::string& field) const {
        if (!v.is_number()) fail(field, "expected a number");
        const double d = v.get<double>();
        if (!std::isfinite(d)) fail(field, "expected a finite number");
        return d;
    }

    int integer(const json& v, const std::string& field) const {
        if (!v.is_number_integer()) fail(field, "expected an integer");
        return v.get<int>();
    }

    Radius radius(const json& v, const std::string& field) const {
        if (v.is_number()) return Radius::literal(number(v, field));
        if (v.is_string()) {
            const std::string s = v.get<std::string>();
            if (s == "p") return Radius::p();
            if (s == "1+p") return Radius::one_plus_p();
            if (s == "q") return Radius::q();
            if (s == "1+q") return Radius::one_plus_q();
            fail(field, "unknown radius symbol '" + s + "'");
        }
        fail(field, "expected a number or one of p, 1+p, q, 1+q");
    }

    Weight weight(const json& v, const std::string& field) const {
        if (v.is_string()) {
            const std::string s = v.get<std::string>();
            if (s == "1") return Weight::One;
            if (s == "1/2") return Weight::Half;
        }
        fail(field, "weight must be \"1\" or \"1/2\"");
    }

    ClassSpec class_spec(const json& j, const std::string& field, bool with_label) const {
        if (!j.is_object()) fail(field, "expected an object");
        ClassSpec c;
        if (with_label) c.label = Reader(where_ + "." + field).string_field(j, "label");
        c.weight = weight(require(j, "weight"), field + ".weight");
        const json& a = require(j, "annulus");
        if (!a.is_array() || a.size() != 2) fail(field + ".annulus", "expected [lo, hi]");
        c.annulus.lo = radius(a[0], field + ".annulus");
        c.annulus.hi = radius(a[1], field + ".annulus");
        c.count = integer(require(j, "count"), field + ".count");
        return c;
    }

    Composition composition(const json& v, const std::string& field) const {
        if (!v.is_array() || v.size() != 3) fail(field, "expected [n11, nhh, n1h]");
        return Composition{integer(v[0], field), integer(v[1], field), integer(v[2], field)};
    }

private:
    std::string where_;
};

ClaimKind kind_from_string(const std::string& s, const Reader& r) {
    if (s == "capacity") return ClaimKind::Capacity;
    if (s == "arrangement") return ClaimKind::Arrangement;
    if (s == "chain") return ClaimKind::Chain;
    r.fail("kind", "unknown claim kind '" + s + "'");
}

ClaimSpec claim_from_json(const json& j, std::size_t index) {
    ClaimSpec c;
    Reader top("claims[" + std::to_string(index) + "]");
    c.id = top.string_field(j, "id");
    if (c.id.empty()) top.fail("id", "empty claim id");
    const Reader r(c.id);
    c.kind = kind_from_string(r.string_field(j, "kind"), r);
    c.statement = r.string_field(j, "statement", false);

    if (j.contains("classes")) {
        const json& cls = j.at("classes");
        if (!cls.is_array()) r.fail("classes", "expected an array");
        for (std::size_t i = 0; i < cls.size(); ++i) {
            c.classes.push_back(r.class_spec(cls[i], "classes[" + std::to_string(i) + "]", true));
        }
    }
    if (j.contains("hypothesis")) {
        const json& h = j.at("hypothesis");
        Hypothesis hyp;
        hyp.ones = r.integer(r.require(h, "ones"), "hypothesis.ones");
        hyp.halves = r.integer(r.require(h, "halves"), "hypothesis.halves");
        c.hypothesis = hyp;
    }
    if (j.contains("steps")) {
        const json& steps = j.at("steps");
        if (!steps.is_array()) r.fail("steps", "expected an array");
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const std::string f = "steps[" + std::to_string(i) + "]";
            const Reader sr(c.id + "." + f);
            ChainStep s;
            s.justification = sr.string_field(steps[i], "justification");
            if (steps[i].contains("target")) s.target = sr.string_field(steps[i], "target");
            if (steps[i].contains("derives")) s.derives = r.class_spec(steps[i].at("derives"), f + ".derives", false);
            s.note = sr.string_field(steps[i], "note", false);
            c.steps.push_back(std::move(s));
        }
    }
    if (j.contains("printed_compositions")) {
        const json& pc = j.at("printed_compositions");
        if (!pc.is_array()) r.fail("printed_compositions", "expected an array");
        for (const auto& v : pc) c.printed_compositions.push_back(r.composition(v, "printed_compositions"));
    }
    if (j.contains("printed_phis")) {
        const json& pp = j.at("printed_phis");
        if (!pp.is_array()) r.fail("printed_phis", "expected an array");
        for (std::size_t i = 0; i < pp.size(); ++i) {
            const std::string f = "printed_phis[" + std::to_string(i) + "]";
            const Reader pr(c.id + "." + f);
            const json& between = r.require(pp[i], "between");
            if (!between.is_array() || between.size() != 2 || !between[0].is_string() ||
                !between[1].is_string()) {
                r.fail(f + ".between", "expected two class labels");
            }
            PrintedPhi phi;
            phi.a = between[0].get<std::string>();
            phi.b = between[1].get<std::string>();
            phi.value = r.number(r.require(pp[i], "value"), f + ".value");
            phi.printed_as = pr.string_field(pp[i], "printed_as", false);
            phi.note = pr.string_field(pp[i], "note", false);
            phi.erratum = pr.string_field(pp[i], "erratum", false);
            c.printed_phis.push_back(std::move(phi));
        }
    }
    if (j.contains("printed_sums")) {
        const json& ps = j.at("printed_sums");
        if (!ps.is_array()) r.fail("printed_sums", "expected an array");
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const std::string f = "printed_sums[" + std::to_string(i) + "]";
            const Reader sr(c.id + "." + f);
            PrintedSum s;
            const std::string kind = sr.string_field(ps[i], "kind");
            if (kind == "equals") s.kind = PrintedSum::Kind::Equals;
            else if (kind == "lower_bound") s.kind = PrintedSum::Kind::LowerBound;
            else r.fail(f + ".kind", "expected \"equals\" or \"lower_bound\"");
            s.value = r.number(r.require(ps[i], "value"), f + ".value");
            if (ps[i].contains("composition")) s.composition = r.composition(ps[i].at("composition"), f + ".composition");
            if (ps[i].contains("arrangement")) {
                const json& a = ps[i].at("arrangement");
                if (!a.is_array()) r.fail(f + ".arrangement", "expected an array of labels");
                for (const auto& l : a) {
                    if (!l.is_string()) r.fail(f + ".arrangement", "expected an array of labels");
                    s.arrangement.push_back(l.get<std::string>());
                }
            }
            if (ps[i].contains("terms")) {
                const json& t = ps[i].at("terms");
                if (!t.is_array()) r.fail(f + ".terms", "expected an array");
                for (const auto& term : t) {
                    if (!term.is_array() || term.size() != 2) r.fail(f + ".terms", "expected [count, value] pairs");
                    s.terms.emplace_back(r.integer(term[0], f + ".terms"), r.number(term[1], f + ".terms"));
                }
            }
            if (ps[i].contains("minimum")) {
                if (!ps[i].at("minimum").is_boolean()) r.fail(f + ".minimum", "expected a boolean");
                s.minimum = ps[i].at("minimum").get<bool>();
            }
            s.note = sr.string_field(ps[i], "note", false);
            s.erratum = sr.string_field(ps[i], "erratum", false);
            c.printed_sums.push_back(std::move(s));
        }
    }
    return c;
}

const ClassSpec* find_class(const ClaimSpec& c, const std::string& label) {
    for (const auto& cls : c.classes) {
        if (cls.label == label) return &cls;
    }
    return nullptr;
}

void validate_literal(const Radius& r, const std::string& where) {
    if (r.symbol == Radius::Symbol::Literal && !(std::isfinite(r.value) && r.value >= 0.0)) {
        throw StructuralError(where, "radius must be a finite number >= 0");
    }
}

void validate_class(const ClassSpec& c, const std::string& where) {
    validate_literal(c.annulus.lo, where + ".annulus");
    validate_literal(c.annulus.hi, where + ".annulus");
    if (c.annulus.lo.symbol == Radius::Symbol::Literal && c.annulus.hi.symbol == Radius::Symbol::Literal &&
        c.annulus.lo.value > c.annulus.hi.value) {
        throw StructuralError(where + ".annulus", "degenerate annulus " + c.annulus.to_string());
    }
    if (c.count < 0) throw StructuralError(where + ".count", "negative count");
}

// Compositions only make sense for one weight-1 class plus one half class.
void validate_composition(const ClaimSpec& c, const Composition* comp, const std::string& where) {
    const ClassSpec* one = nullptr;
    const ClassSpec* half = nullptr;
    for (const auto& cls : c.classes) (cls.weight == Weight::One ? one : half) = &cls;
    if (c.classes.size() != 2 || one == nullptr || half == nullptr) {
        throw StructuralError(where, "needs exactly one weight-1 class and one half class");
    }
    if (comp == nullptr) return;
    const auto all = enumerate_compositions(one->count, half->count);
    if (std::find(all.begin(), all.end(), *comp) == all.end()) {
        throw StructuralError(where, "not realizable for " + std::to_string(one->count) + " and " +
                                         std::to_string(half->count) + " points");
    }
}

void validate_claim(const ClaimSpec& c, const ProofScript& script) {
    const std::string& id = c.id;
    std::set<std::string> labels;
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
        const auto& cls = c.classes[i];
        const std::string where = id + ".classes[" + std::to_string(i) + "]";
        if (cls.label.empty()) throw StructuralError(where + ".label", "empty class label");
        if (!labels.insert(cls.label).second) {
            throw StructuralError(where + ".label", "duplicate class label '" + cls.label + "'");
        }
        validate_class(cls, where);
    }

    switch (c.kind) {
        case ClaimKind::Capacity:
            if (c.classes.size() != 1) throw StructuralError(id + ".classes", "a capacity claim needs exactly one class");
            if (c.classes[0].count < 1) throw StructuralError(id + ".classes[0].count", "count must be >= 1");
            break;
        case ClaimKind::Arrangement: {
            if (c.classes.empty()) throw StructuralError(id + ".classes", "an arrangement claim needs classes");
            int total = 0;
            for (const auto& cls : c.classes) total += cls.count;
            if (total < 2) throw StructuralError(id + ".classes", "an arrangement needs at least two points");
            break;
        }
        case ClaimKind::Chain:
            if (!c.classes.empty()) throw StructuralError(id + ".classes", "a chain claim has no classes");
            if (!c.hypothesis) throw StructuralError(id + ".hypothesis", "a chain claim needs a hypothesis");
            if (c.hypothesis->ones < 0 || c.hypothesis->halves < 0) {
                throw StructuralError(id + ".hypothesis", "negative count");
            }
            if (c.steps.empty()) throw StructuralError(id + ".steps", "a chain claim needs steps");
            break;
    }
    if (c.kind != ClaimKind::Chain) {
        if (c.hypothesis) throw StructuralError(id + ".hypothesis", "only chain claims carry a hypothesis");
        if (!c.steps.empty()) throw StructuralError(id + ".steps", "only chain claims carry steps");
    }

    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const auto& s = c.steps[i];
        const std::string where = id + ".steps[" + std::to_string(i) + "]";
        const ClaimSpec* just = script.find(s.justification);
        if (just == nullptr) {
            throw StructuralError(where + ".justification", "unknown claim '" + s.justification + "'");
        }
        if (just->kind == ClaimKind::Chain) {
            throw StructuralError(where + ".justification", "'" + s.justification + "' is a chain, not a class claim");
        }
        const bool last = i + 1 == c.steps.size();
        if (s.target.has_value() != s.derives.has_value()) {
            throw StructuralError(where, "target and derives must be given together");
        }
        if (!s.target && !last) throw StructuralError(where, "only the last step may close the chain");
        if (s.target && last) throw StructuralError(where, "the last step must close the chain (no target)");
        if (s.target && find_class(*just, *s.target) == nullptr) {
            throw StructuralError(where + ".target", "no class '" + *s.target + "' in '" + s.justification + "'");
        }
        if (s.derives) validate_class(*s.derives, where + ".derives");
    }

    for (std::size_t i = 0; i < c.printed_phis.size(); ++i) {
        const auto& p = c.printed_phis[i];
        const std::string where = id + ".printed_phis[" + std::to_string(i) + "].between";
        if (!labels.count(p.a)) throw StructuralError(where, "unknown class '" + p.a + "'");
        if (!labels.count(p.b)) throw StructuralError(where, "unknown class '" + p.b + "'");
    }
    if (!c.printed_compositions.empty()) validate_composition(c, nullptr, id + ".printed_compositions");
    for (std::size_t i = 0; i < c.printed_sums.size(); ++i) {
        const auto& s = c.printed_sums[i];
        const std::string where = id + ".printed_sums[" + std::to_string(i) + "]";
        if (c.kind == ClaimKind::Capacity) {
            if (s.composition || !s.arrangement.empty()) {
                throw StructuralError(where, "a capacity sum takes neither composition nor arrangement");
            }
        } else if (s.composition.has_value() == !s.arrangement.empty()) {
            throw StructuralError(where, "exactly one of composition and arrangement is required");
        }
        if (s.composition) validate_composition(c, &*s.composition, where + ".composition");
        std::map<std::string, int> used;
        for (const auto& l : s.arrangement) {
            if (!labels.count(l)) throw StructuralError(where + ".arrangement", "unknown class '" + l + "'");
            ++used[l];
        }
        for (const auto& cls : c.classes) {
            if (!s.arrangement.empty() && used[cls.label] != cls.count) {
                throw StructuralError(where + ".arrangement", "uses class '" + cls.label + "' " +
                                                                  std::to_string(used[cls.label]) + " times, expected " +
                                                                  std::to_string(cls.count));
            }
        }
        for (const auto& [count, value] : s.terms) {
            if (count < 0 || !std::isfinite(value)) throw StructuralError(where + ".terms", "invalid term");
        }
    }
    int minima = 0;
    for (const auto& s : c.printed_sums) minima += s.minimum ? 1 : 0;
    if (minima > 1) throw StructuralError(id + ".printed_sums", "more than one sum flagged as minimum");
}

}  // namespace

// Radius / AnnulusSpec -------------------------------------------------------

double Radius::resolve(const Params& params) const {
    switch (symbol) {
        case Symbol::Literal: return value;
        case Symbol::P: return params.p;
        case Symbol::OnePlusP: return params.one_plus_p();
        case Symbol::Q: return params.q;
        case Symbol::OnePlusQ: return params.one_plus_q();
    }
    return value;
}

std::string Radius::to_string() const {
    switch (symbol) {
        case Symbol::Literal: return fmt_num(value);
        case Symbol::P: return "p";
        case Symbol::OnePlusP: return "1+p";
        case Symbol::Q: return "q";
        case Symbol::OnePlusQ: return "1+q";
    }
    return fmt_num(value);
}

Annulus AnnulusSpec::resolve(const Params& params) const {
    return Annulus::make(lo.resolve(params), hi.resolve(params));
}

std::string AnnulusSpec::to_string() const { return "[" + lo.to_string() + ", " + hi.to_string() + "]"; }

std::string to_string(ClaimKind k) {
    switch (k) {
        case ClaimKind::Capacity: return "capacity";
        case ClaimKind::Arrangement: return "arrangement";
        case ClaimKind::Chain: return "chain";
    }
    return "?";
}

std::optional<double> ClaimSpec::expected_margin() const {
    for (const auto& s : printed_sums) {
        if (s.minimum) return s.value - 360.0;
    }
    return std::nullopt;
}

const ClaimSpec* ProofScript::find(const std::string& id) const {
    for (const auto& c : claims) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

// Validation ----------------------------------------------------------------

void validate_script(const ProofScript& script) {
    std::set<std::string> ids;
    for (const auto& c : script.claims) {
        if (c.id.empty()) throw StructuralError("claims", "empty claim id");
        if (!ids.insert(c.id).second) throw StructuralError(c.id, "duplicate claim id");
    }
    for (const auto& c : script.claims) validate_claim(c, script);
    (void)dependency_order(script);
}

std::vector<std::string> dependency_order(const ProofScript& script) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < script.claims.size(); ++i) index[script.claims[i].id] = i;

    const std::size_t n = script.claims.size();
    std::vector<std::vector<std::size_t>> users(n);
    std::vector<int> pending(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::set<std::size_t> deps;
        for (const auto& s : script.claims[i].steps) {
            auto it = index.find(s.justification);
            if (it == index.end()) {
                throw StructuralError(script.claims[i].id, "unknown justification '" + s.justification + "'");
            }
            deps.insert(it->second);
        }
        for (std::size_t d : deps) {
            users[d].push_back(i);
            ++pending[i];
        }
    }

    // Kahn's algorithm, always taking the earliest ready claim in script order.
    std::set<std::size_t> ready;
    for (std::size_t i = 0; i < n; ++i) {
        if (pending[i] == 0) ready.insert(i);
    }
    std::vector<std::string> order;
    while (!ready.empty()) {
        const std::size_t i = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(script.claims[i].id);
        for (std::size_t u : users[i]) {
            if (--pending[u] == 0) ready.insert(u);
        }
    }
    if (order.size() != n) {
        for (std::size_t i = 0; i < n; ++i) {
            if (pending[i] > 0) throw StructuralError(script.claims[i].id, "dependency cycle");
        }
    }
    return order;
}

std::vector<PointClass> resolve_classes(const std::vector<ClassSpec>& classes, const Params& params) {
    std::vector<PointClass> out;
    out.reserve(classes.size());
    for (const auto& c : classes) out.push_back(PointClass{c.weight, c.annulus.resolve(params), c.count, c.label});
    return out;
}

// JSON ----------------------------------------------------------------------

ordered_json to_json(const ProofScript& script) {
    ordered_json doc;
    doc["format"] = kFormat;
    doc["version"] = kVersion;
    doc["name"] = script.name;
    ordered_json claims = ordered_json::array();
    for (const auto& c : script.claims) {
        ordered_json j;
        j["id"] = c.id;
        j["kind"] = to_string(c.kind);
        if (!c.statement.empty()) j["statement"] = c.statement;
        if (!c.classes.empty()) {
            j["classes"] = ordered_json::array();
            for (const auto& cls : c.classes) j["classes"].push_back(class_json(cls, true));
        }
        if (c.hypothesis) j["hypothesis"] = {{"ones", c.hypothesis->ones}, {"halves", c.hypothesis->halves}};
        if (!c.steps.empty()) {
            j["steps"] = ordered_json::array();
            for (const auto& s : c.steps) {
                ordered_json sj;
                sj["justification"] = s.justification;
                if (s.target) sj["target"] = *s.target;
                if (s.derives) sj["derives"] = class_json(*s.derives, false);
                if (!s.note.empty()) sj["note"] = s.note;
                j["steps"].push_back(std::move(sj));
            }
        }
        if (!c.printed_compositions.empty()) {
            j["printed_compositions"] = ordered_json::array();
            for (const auto& comp : c.printed_compositions) j["printed_compositions"].push_back(composition_json(comp));
        }
        if (!c.printed_phis.empty()) {
            j["printed_phis"] = ordered_json::array();
            for (const auto& p : c.printed_phis) {
                ordered_json pj;
                pj["between"] = ordered_json::array({p.a, p.b});
                pj["value"] = p.value;
                if (!p.printed_as.empty()) pj["printed_as"] = p.printed_as;
                if (!p.note.empty()) pj["note"] = p.note;
                if (!p.erratum.empty()) pj["erratum"] = p.erratum;
                j["printed_phis"].push_back(std::move(pj));
            }
        }
        if (!c.printed_sums.empty()) {
            j["printed_sums"] = ordered_json::array();
            for (const auto& s : c.printed_sums) {
                ordered_json sj;
                sj["kind"] = s.kind == PrintedSum::Kind::Equals ? "equals" : "lower_bound";
                sj["value"] = s.value;
                if (s.composition) sj["composition"] = composition_json(*s.composition);
                if (!s.arrangement.empty()) sj["arrangement"] = s.arrangement;
                if (!s.terms.empty()) {
                    sj["terms"] = ordered_json::array();
                    for (const auto& [count, value] : s.terms) sj["terms"].push_back(ordered_json::array({count, value}));
                }
                if (s.minimum) sj["minimum"] = true;
                if (!s.note.empty()) sj["note"] = s.note;
                if (!s.erratum.empty()) sj["erratum"] = s.erratum;
                j["printed_sums"].push_back(std::move(sj));
            }
        }
        claims.push_back(std::move(j));
    }
    doc["claims"] = std::move(claims);
    return doc;
}

ProofScript script_from_json(const json& doc) {
    const Reader r("script");
    if (!doc.is_object()) r.fail("", "expected a JSON object");
    if (r.string_field(doc, "format") != kFormat) r.fail("format", std::string("expected \"") + kFormat + "\"");
    if (r.integer(r.require(doc, "version"), "version") != kVersion) r.fail("version", "unsupported version");
    ProofScript script;
    script.name = r.string_field(doc, "name", false);
    const json& claims = r.require(doc, "claims");
    if (!claims.is_array()) r.fail("claims", "expected an array");
    for (std::size_t i = 0; i < claims.size(); ++i) script.claims.push_back(claim_from_json(claims[i], i));
    validate_script(script);
    return script;
}

ProofScript load_script(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open proof script '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw StructuralError(path, std::string("invalid JSON: ") + e.what());
    }
    return script_from_json(doc);
}

}  // namespace sigcheck
