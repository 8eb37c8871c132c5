#include "altchar/cli.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "altchar/acceptance.hpp"
#include "altchar/characters.hpp"
#include "altchar/classification.hpp"
#include "altchar/cycle_type.hpp"
#include "altchar/errors.hpp"
#include "altchar/global_classes.hpp"
#include "altchar/multiplicities.hpp"
#include "altchar/number_theory.hpp"

namespace altchar {

namespace {

constexpr int kClosedFormBound = 30;
constexpr int kTableBound = kDefaultTableBound;
constexpr int kBruteForceBound = kDefaultGlobalBound;

const char* const kPairingNote =
    "split labels: the :+ class contains the permutation whose cycles are laid out "
    "consecutively on 0..n-1 in part order, the :- class is its conjugate by (0 1); the :+ "
    "irrep takes (eps + sqrt(eps*M))/2 on the :+ class with the principal square root; an "
    "irrep and class with equal tags get (a + d)/2, opposite tags (a - d)/2";

std::string csv_field(const Json& value) {
    if (value.is_null()) return "";
    if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
    if (!value.is_string()) return value.dump();
    const auto text = value.get<std::string>();
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char ch : text) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

struct Settings {
    std::string format = "json";
    bool unsafe_bounds = false;
    bool timing = false;
};

class Guard {
public:
    explicit Guard(const Settings& settings) : unsafe_(settings.unsafe_bounds) {}

    int closed_form() const { return unsafe_ ? INT_MAX : kClosedFormBound; }
    int table() const { return unsafe_ ? INT_MAX : kTableBound; }
    int brute_force() const { return unsafe_ ? INT_MAX : kBruteForceBound; }

    void check(int n, int bound, const char* what) const {
        if (n > bound) {
            throw BoundExceeded(std::string(what) + " is limited to n <= " + std::to_string(bound) +
                                " (got n = " + std::to_string(n) +
                                "); pass --unsafe-bounds to lift the guard");
        }
    }

private:
    bool unsafe_;
};

Partition parse_sn_label(const std::string& text) {
    if (text.find(':') != std::string::npos) {
        throw ParseError("symmetric-group labels take no split tag: '" + text + "'");
    }
    return Partition::parse(text);
}

void require_group(const std::string& group) {
    if (group != "sn" && group != "an") throw ParseError("--group must be 'sn' or 'an'");
}

void require_same_degree(int a, int b) {
    if (a != b) {
        throw ParseError("representation and class have different degrees (" + std::to_string(a) +
                         " and " + std::to_string(b) + ")");
    }
}

void require_positive_degree(const Partition& p) {
    if (p.n() < 1) throw ParseError("empty partition is not accepted here");
}

bool needs_pairing_note(const AnIrrep& v, const AnClass& c) {
    return v.is_split() || c.is_split();
}

std::string case_name(AnMultiplicityCase which) {
    switch (which) {
        case AnMultiplicityCase::Unsplit:
            return "whole";
        case AnMultiplicityCase::SplitBiased:
            return "split-biased";
        case AnMultiplicityCase::SplitHalved:
            return "split-halved";
    }
    return "?";
}

void fill_vector_rows(OutputRecord& rec, const MultiplicityVector& v,
                      const std::optional<std::int64_t>& only) {
    rec.columns = {"i", "multiplicity"};
    for (std::int64_t i = 0; i < v.m; ++i) {
        if (only && mod_floor(*only, v.m) != i) continue;
        rec.rows.push_back({i, bigint_json(v.entries[static_cast<std::size_t>(i)])});
    }
}

// Subcommand handlers. Each fills the record from already-parsed options.

struct EigmultArgs {
    std::string group;
    std::string irrep;
    std::string cls;
    std::optional<std::int64_t> i;
};

void eigmult(const EigmultArgs& a, const Guard& guard, OutputRecord& rec) {
    require_group(a.group);
    rec.inputs["group"] = a.group;
    if (a.group == "sn") {
        const Partition lambda = parse_sn_label(a.irrep);
        const Partition mu = parse_sn_label(a.cls);
        require_positive_degree(lambda);
        require_same_degree(lambda.n(), mu.n());
        guard.check(lambda.n(), guard.closed_form(), "eigmult");
        const MultiplicityVector v = sn_multiplicity_vector(lambda, mu);
        rec.inputs["irrep"] = lambda.to_string();
        rec.inputs["class"] = mu.to_string();
        rec.inputs["m"] = v.m;
        rec.inputs["dimension"] = bigint_json(dimension(lambda));
        rec.provenance = "eigenvalue multiplicities from the character sum grouped into Ramanujan sums";
        fill_vector_rows(rec, v, a.i);
    } else {
        const AnIrrep v = AnIrrep::parse(a.irrep);
        const AnClass c = AnClass::parse(a.cls);
        require_same_degree(v.n(), c.n());
        if (v.n() < 2) throw ParseError("alternating-group queries need n >= 2");
        guard.check(v.n(), guard.closed_form(), "eigmult");
        const auto which = an_multiplicity_case(v, c);
        const MultiplicityVector vec = an_multiplicity_vector(v, c);
        rec.inputs["irrep"] = v.label();
        rec.inputs["class"] = c.label();
        rec.inputs["m"] = vec.m;
        rec.inputs["dimension"] = bigint_json(an_dimension(v));
        rec.inputs["case"] = case_name(which);
        switch (which) {
            case AnMultiplicityCase::Unsplit:
                rec.provenance = "restriction of an irreducible symmetric-group module";
                break;
            case AnMultiplicityCase::SplitBiased:
                rec.provenance = "split irrep at its own split class: (a +/- d)/2 with the closed-form bias d";
                break;
            case AnMultiplicityCase::SplitHalved:
                rec.provenance = "split irrep away from its own class: a/2";
                break;
        }
        if (needs_pairing_note(v, c)) rec.notes.push_back(kPairingNote);
        fill_vector_rows(rec, vec, a.i);
    }
    if (a.i) rec.inputs["i"] = *a.i;
}

std::string condition_text(const BiasResult& r) {
    std::string out;
    for (const auto& c : r.conditions) {
        if (!out.empty()) out += ";";
        out += "p=" + std::to_string(c.p) + " e=" + std::to_string(c.e) + " f=" +
               std::to_string(c.f) + " d=" + std::to_string(c.d) + " " +
               (c.satisfied ? "ok" : "fails");
    }
    return out;
}

struct BiasArgs {
    std::string mu;
    std::optional<std::int64_t> i;
    std::string orientation = "defining";
};

void bias_cmd(const BiasArgs& a, const Guard& guard, OutputRecord& rec) {
    const Partition mu = parse_sn_label(a.mu);
    require_positive_degree(mu);
    if (!mu.has_distinct_odd_parts()) {
        throw ParseError("bias needs a cycle type with distinct odd parts, got " + mu.to_string());
    }
    guard.check(mu.n(), guard.closed_form(), "bias");
    if (a.orientation != "defining" && a.orientation != "conjugated") {
        throw ParseError("--orientation must be 'defining' or 'conjugated'");
    }
    const auto orientation =
        a.orientation == "defining" ? BiasOrientation::Defining : BiasOrientation::Conjugated;
    const CycleTypeData data = cycle_type_data(mu);
    rec.inputs["mu"] = mu.to_string();
    rec.inputs["lambda"] = phi(mu).to_string();
    rec.inputs["M"] = data.product;
    rec.inputs["m"] = data.order;
    rec.inputs["epsilon"] = *data.epsilon;
    rec.inputs["orientation"] = a.orientation;
    if (a.i) rec.inputs["i"] = *a.i;
    rec.provenance = "closed-form bias: sqrt(eps*M)/m times Gauss-sum and unit-sum factors per prime";
    rec.notes.push_back("d = a(lambda:+) - a(lambda:-) at the :+ class of mu, lambda = phi(mu)");
    rec.notes.push_back(kPairingNote);
    rec.columns = {"i", "d", "abs_d", "nonzero", "conditions"};
    for (std::int64_t i = 0; i < data.order; ++i) {
        if (a.i && mod_floor(*a.i, data.order) != i) continue;
        const BiasResult r = bias(mu, i, orientation);
        rec.rows.push_back({i, r.value, r.abs_formula, r.nonzero, condition_text(r)});
    }
}

struct LabelArgs {
    std::string group;
    std::string irrep;
    std::string cls;
};

void rule_cells(const std::optional<ExceptionRule>& rule, std::vector<Json>& row) {
    row.push_back(rule ? Json(rule->id) : Json(""));
    row.push_back(rule ? Json(rule->description) : Json(""));
}

void invariant_cmd(const LabelArgs& a, const Guard& guard, OutputRecord& rec) {
    require_group(a.group);
    rec.inputs["group"] = a.group;
    rec.columns = {"irrep", "class", "has_invariant", "rule", "description"};
    std::optional<ExceptionRule> rule;
    std::vector<Json> row;
    if (a.group == "sn") {
        const Partition lambda = parse_sn_label(a.irrep);
        const Partition mu = parse_sn_label(a.cls);
        require_positive_degree(lambda);
        require_same_degree(lambda.n(), mu.n());
        guard.check(lambda.n(), guard.closed_form(), "invariant");
        rule = sn_invariant_exception(lambda, mu);
        row = {lambda.to_string(), mu.to_string(), !rule.has_value()};
    } else {
        const AnIrrep v = AnIrrep::parse(a.irrep);
        // The answer does not depend on the split tag, so a bare split cycle
        // type is accepted and both halves are checked.
        std::vector<AnClass> classes;
        std::string class_label = a.cls;
        if (a.cls.find(':') == std::string::npos) {
            const Partition mu = Partition::parse(a.cls);
            if (mu.has_distinct_odd_parts()) {
                classes = {AnClass(mu, ClassTag::Plus), AnClass(mu, ClassTag::Minus)};
                class_label = mu.to_string();
            }
        }
        if (classes.empty()) {
            classes.push_back(AnClass::parse(a.cls));
            class_label = classes.front().label();
        }
        require_same_degree(v.n(), classes.front().n());
        if (v.n() < 2) throw ParseError("alternating-group queries need n >= 2");
        guard.check(v.n(), guard.closed_form(), "invariant");
        rule = an_invariant_exception(v, classes.front());
        for (const AnClass& c : classes) {
            ensure(an_invariant_exception(v, c) == rule, "invariant verdict depends on the split tag");
        }
        row = {v.label(), class_label, !rule.has_value()};
    }
    rec.inputs["irrep"] = row[0];
    rec.inputs["class"] = row[1];
    rec.provenance = rule ? rule->id : "no exception rule applies";
    rule_cells(rule, row);
    rec.rows.push_back(std::move(row));
}

void unisingular_cmd(const LabelArgs& a, const Guard& guard, OutputRecord& rec) {
    require_group(a.group);
    rec.inputs["group"] = a.group;
    rec.columns = {"irrep", "unisingular", "rule", "description"};
    std::optional<ExceptionRule> rule;
    std::vector<Json> row;
    if (a.group == "sn") {
        const Partition lambda = parse_sn_label(a.irrep);
        require_positive_degree(lambda);
        guard.check(lambda.n(), guard.closed_form(), "unisingular");
        rule = sn_unisingular_exception(lambda);
        row = {lambda.to_string(), !rule.has_value()};
    } else {
        const AnIrrep v = AnIrrep::parse(a.irrep);
        if (v.n() < 2) throw ParseError("alternating-group queries need n >= 2");
        guard.check(v.n(), guard.closed_form(), "unisingular");
        rule = an_unisingular_exception(v);
        row = {v.label(), !rule.has_value()};
    }
    rec.inputs["irrep"] = row[0];
    rec.provenance = rule ? rule->id : "no exception rule applies";
    rule_cells(rule, row);
    rec.rows.push_back(std::move(row));
}

void swanson_cmd(int n, const Guard& guard, OutputRecord& rec) {
    if (n < 2) throw ParseError("swanson needs n >= 2");
    guard.check(n, guard.closed_form(), "swanson");
    rec.inputs["n"] = n;
    rec.provenance = "exception list for eigenvalues of an n-cycle";
    rec.columns = {"lambda", "i", "rule"};
    for (const auto& e : swanson_exceptions(n)) rec.rows.push_back({e.lambda.to_string(), e.i, e.rule});
}

void power_conj_cmd(const std::string& mu_text, std::int64_t i, const Guard& guard,
                    OutputRecord& rec) {
    const Partition mu = parse_sn_label(mu_text);
    require_positive_degree(mu);
    if (!mu.has_distinct_odd_parts()) {
        throw ParseError("power-conj needs a cycle type with distinct odd parts, got " +
                         mu.to_string());
    }
    guard.check(mu.n(), guard.closed_form(), "power-conj");
    const CycleTypeData data = cycle_type_data(mu);
    if (gcd64(mod_floor(i, data.order), data.order) != 1) {
        throw ParseError("i = " + std::to_string(i) + " is not coprime to the order " +
                         std::to_string(data.order));
    }
    const PowerClass verdict = power_conjugacy(mu, i);
    rec.inputs["mu"] = mu.to_string();
    rec.inputs["i"] = i;
    rec.inputs["M"] = data.product;
    rec.provenance = "Jacobi symbol (i | M) decides whether the power stays in its A_n class";
    rec.columns = {"mu", "i", "jacobi", "verdict"};
    rec.rows.push_back({mu.to_string(), i, jacobi(i, data.product),
                        verdict == PowerClass::Same ? "Same" : "Swapped"});
}

struct GlobalArgs {
    std::string mu;
    bool verify = false;
    bool inner_products = false;
};

std::vector<Json> verdict_row(const char* method, const GlobalVerdict& v) {
    return {method,
            v.mu.to_string(),
            v.in_scope,
            v.is_global ? Json(*v.is_global) : Json(nullptr),
            v.rule,
            v.witness ? Json(v.witness->irrep.label()) : Json(nullptr),
            v.witness ? bigint_json(v.witness->multiplicity) : Json(nullptr),
            v.inner_products.empty() ? Json(nullptr) : bigint_json(v.centralizer_order)};
}

void global_cmd(const GlobalArgs& a, const Guard& guard, OutputRecord& rec) {
    const Partition mu = parse_sn_label(a.mu);
    if (mu.n() < 2) throw ParseError("global needs n >= 2");
    if (!in_alternating_group(mu)) {
        throw ParseError("cycle type " + mu.to_string() + " is an odd permutation, not in A_n");
    }
    guard.check(mu.n(), guard.closed_form(), "global");
    rec.inputs["mu"] = mu.to_string();
    rec.inputs["verify"] = a.verify || a.inner_products;
    const GlobalVerdict closed = is_global_class(mu);
    std::optional<GlobalVerdict> brute;
    if (a.verify || a.inner_products) {
        guard.check(mu.n(), guard.brute_force(), "brute-force global check");
        brute = global_brute_force(mu, INT_MAX);
    }
    rec.provenance = closed.rule;
    if (!closed.in_scope) {
        rec.notes.push_back("outside the closed-form hypothesis; the question is open there" +
                            std::string(brute ? ", brute-force verdict attached" : ""));
    }
    if (a.inner_products) {
        rec.columns = {"irrep", "dimension", "multiplicity"};
        rec.inputs["centralizer_order"] = bigint_json(brute->centralizer_order);
        rec.notes.push_back(std::string("brute-force verdict: ") +
                            (*brute->is_global ? "global" : "not global"));
        for (const auto& entry : brute->inner_products) {
            rec.rows.push_back({entry.irrep.label(), bigint_json(an_dimension(entry.irrep)),
                                bigint_json(entry.multiplicity)});
        }
        return;
    }
    rec.columns = {"method", "mu", "in_scope", "is_global", "rule",
                   "witness", "witness_multiplicity", "centralizer_order"};
    rec.rows.push_back(verdict_row("closed-form", closed));
    if (brute) rec.rows.push_back(verdict_row("brute-force", *brute));
}

void chartable_cmd(int n, const Guard& guard, OutputRecord& rec) {
    if (n < 2) throw ParseError("chartable needs n >= 2");
    const CharacterTable table = character_table_an(n, guard.table());
    rec.inputs["n"] = n;
    rec.inputs["classes"] = table.classes.size();
    rec.provenance = "symmetric-group characters by border strips, split by the alternating-group rule";
    rec.notes.push_back("value = (a + b*sqrt(D))/2");
    rec.notes.push_back(kPairingNote);
    rec.columns = {"irrep", "dimension", "class", "class_size", "a", "b", "D"};
    for (std::size_t r = 0; r < table.irreps.size(); ++r) {
        for (std::size_t c = 0; c < table.classes.size(); ++c) {
            const QuadValue& x = table.values[r][c];
            rec.rows.push_back({table.irreps[r].irrep.label(), bigint_json(table.irreps[r].dimension),
                                table.classes[c].cls.label(), bigint_json(table.classes[c].size),
                                bigint_json(x.a()), bigint_json(x.b()), x.discriminant()});
        }
    }
}

std::vector<int> tier_criteria(const std::string& tier) {
    if (tier == "quick") return {1, 4, 6};
    if (tier == "full") {
        std::vector<int> all;
        for (int id = 1; id <= kCriterionCount; ++id) all.push_back(id);
        return all;
    }
    throw ParseError("--tier must be 'quick' or 'full'");
}

bool selftest_cmd(const std::string& tier, const std::vector<int>& only, bool timing,
                  OutputRecord& rec) {
    const std::vector<int> ids = only.empty() ? tier_criteria(tier) : only;
    for (int id : ids) {
        if (id < 1 || id > kCriterionCount) {
            throw ParseError("no acceptance criterion " + std::to_string(id));
        }
    }
    rec.inputs["tier"] = only.empty() ? Json(tier) : Json("custom");
    rec.inputs["criteria"] = ids;
    rec.provenance = "acceptance criteria";
    rec.columns = {"id", "name", "passed", "detail"};
    if (timing) {
        rec.columns.push_back("seconds");
        rec.columns.push_back("limit_seconds");
    }
    bool all_passed = true;
    for (const auto& r : run_acceptance(ids, nullptr)) {
        all_passed = all_passed && r.passed();
        std::vector<Json> row{r.id, r.name, r.passed(), r.detail};
        if (timing) {
            row.emplace_back(r.seconds);
            row.emplace_back(r.limit_seconds);
        }
        rec.rows.push_back(std::move(row));
    }
    return all_passed;
}

}  // namespace

Json to_json(const OutputRecord& record) {
    Json results = Json::array();
    for (const auto& row : record.rows) {
        Json obj = Json::object();
        for (std::size_t k = 0; k < record.columns.size(); ++k) obj[record.columns[k]] = row.at(k);
        results.push_back(std::move(obj));
    }
    Json out{{"command", record.command},
             {"arguments", record.arguments},
             {"inputs", record.inputs},
             {"provenance", record.provenance},
             {"notes", record.notes},
             {"columns", record.columns},
             {"results", std::move(results)}};
    if (record.seconds) out["timing"] = Json{{"seconds", *record.seconds}};
    return out;
}

std::string to_csv(const OutputRecord& record) {
    std::string out;
    for (std::size_t k = 0; k < record.columns.size(); ++k) {
        if (k) out += ',';
        out += csv_field(record.columns[k]);
    }
    out += '\n';
    for (const auto& row : record.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) out += ',';
            out += csv_field(row[k]);
        }
        out += '\n';
    }
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Eigenvalue multiplicities and related classifications for symmetric and "
                 "alternating groups",
                 "altchar"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings settings;
    app.add_option("--format", settings.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_flag("--unsafe-bounds", settings.unsafe_bounds,
                 "Lift the size guards (n <= 30 closed forms, 14 tables, 11 brute force)");
    app.add_flag("--timing", settings.timing, "Report wall-clock time");

    OutputRecord rec;
    std::function<bool(const Guard&)> action;  // returns false if a check failed

    EigmultArgs eig;
    auto* eig_cmd = app.add_subcommand("eigmult", "Eigenvalue multiplicity vector or entry");
    eig_cmd->add_option("--group", eig.group, "sn or an")->required();
    eig_cmd->add_option("--irrep", eig.irrep, "Irrep label, e.g. 3,3,2:+")->required();
    eig_cmd->add_option("--class", eig.cls, "Class label, e.g. 5,3:-")->required();
    eig_cmd->add_option("--i", eig.i, "Single eigenvalue exponent");
    eig_cmd->callback([&] { action = [&](const Guard& g) { eigmult(eig, g, rec); return true; }; });

    BiasArgs bias_args;
    auto* bias_sub = app.add_subcommand("bias", "Closed-form bias of a split pair");
    bias_sub->add_option("--mu", bias_args.mu, "Cycle type with distinct odd parts")->required();
    bias_sub->add_option("--i", bias_args.i, "Single eigenvalue exponent");
    bias_sub->add_option("--orientation", bias_args.orientation,
                         "Root-of-unity orientation: defining or conjugated")
        ->capture_default_str();
    bias_sub->callback([&] { action = [&](const Guard& g) { bias_cmd(bias_args, g, rec); return true; }; });

    LabelArgs inv;
    auto* inv_cmd = app.add_subcommand("invariant", "Does the class fix a non-zero vector?");
    inv_cmd->add_option("--group", inv.group, "sn or an")->required();
    inv_cmd->add_option("--irrep", inv.irrep, "Irrep label")->required();
    inv_cmd->add_option("--class", inv.cls, "Class label")->required();
    inv_cmd->callback([&] { action = [&](const Guard& g) { invariant_cmd(inv, g, rec); return true; }; });

    LabelArgs uni;
    auto* uni_cmd = app.add_subcommand("unisingular", "Does every element fix a non-zero vector?");
    uni_cmd->add_option("--group", uni.group, "sn or an")->required();
    uni_cmd->add_option("--irrep", uni.irrep, "Irrep label")->required();
    uni_cmd->callback([&] { action = [&](const Guard& g) { unisingular_cmd(uni, g, rec); return true; }; });

    int swanson_n = 0;
    auto* swanson_sub = app.add_subcommand("swanson", "Missing eigenvalues of an n-cycle");
    swanson_sub->add_option("--n", swanson_n, "Degree")->required();
    swanson_sub->callback([&] { action = [&](const Guard& g) { swanson_cmd(swanson_n, g, rec); return true; }; });

    std::string pc_mu;
    std::int64_t pc_i = 0;
    auto* pc_cmd = app.add_subcommand("power-conj", "Is w^i in the same A_n class as w?");
    pc_cmd->add_option("--mu", pc_mu, "Cycle type with distinct odd parts")->required();
    pc_cmd->add_option("--i", pc_i, "Exponent coprime to the order")->required();
    pc_cmd->callback([&] { action = [&](const Guard& g) { power_conj_cmd(pc_mu, pc_i, g, rec); return true; }; });

    GlobalArgs glob;
    auto* glob_cmd = app.add_subcommand("global", "Is the A_n class global?");
    glob_cmd->add_option("--mu", glob.mu, "Cycle type")->required();
    glob_cmd->add_flag("--verify", glob.verify, "Attach the brute-force verdict (n <= 11)");
    glob_cmd->add_flag("--inner-products", glob.inner_products,
                       "List the brute-force inner product for every irrep");
    glob_cmd->callback([&] { action = [&](const Guard& g) { global_cmd(glob, g, rec); return true; }; });

    int table_n = 0;
    auto* table_cmd = app.add_subcommand("chartable", "Character table of A_n");
    table_cmd->add_option("--n", table_n, "Degree")->required();
    table_cmd->callback([&] { action = [&](const Guard& g) { chartable_cmd(table_n, g, rec); return true; }; });

    std::string tier = "full";
    std::vector<int> criteria;
    auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance criteria");
    self_cmd->add_option("--tier", tier, "quick or full")->capture_default_str();
    self_cmd->add_option("--criteria", criteria, "Run only these criterion numbers")->delimiter(',');
    self_cmd->callback([&] {
        action = [&](const Guard&) { return selftest_cmd(tier, criteria, settings.timing, rec); };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    rec.command = app.get_subcommands().front()->get_name();
    rec.arguments = args;
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    try {
        ok = action(Guard(settings));
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    if (settings.timing) {
        rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    if (settings.format == "csv") {
        out << to_csv(rec);
        if (rec.seconds) err << "timing: " << *rec.seconds << " s\n";
    } else {
        out << to_json(rec).dump(2) << "\n";
    }
    return ok ? kExitOk : kExitInternal;
}

}  // namespace altchar
