#include "cellfrob/report.hpp"

#include <sstream>

#include "cellfrob/projectivity.hpp"

namespace cellfrob {

namespace {

template <FieldScalar K>
Json json_matrix(const Matrix<K>& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json json_checks(const ValidationReport& rep) {
    Json out = Json::array();
    for (const auto& c : rep.checks) {
        Json e{{"name", c.name}, {"passed", c.passed}};
        if (!c.passed) e["witness"] = c.witness;
        out.push_back(std::move(e));
    }
    return out;
}

Json json_check(const CheckResult& c) {
    Json e{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) e["witness"] = c.witness;
    return e;
}

Json json_criterion(const CriterionResult& c) {
    return Json{{"verdict", verdict_name(c.verdict)}, {"detail", c.detail}};
}

Json json_verdict(const ProjectivityVerdict& v) {
    Json e;
    e["simplicity"] = simplicity_name(v.simplicity);
    e["simplicity_detail"] = v.simplicity_how;
    if (v.simplicity == Simplicity::NotSimple) e["submodule_witness_dim"] = v.simplicity_witness_dim;
    e["criterion_c"] = json_criterion(v.criterion_c);
    e["criterion_psi"] = json_criterion(v.criterion_psi);
    e["criterion_k"] = json_criterion(v.criterion_k);
    e["oracle_gaschutz"] = v.oracle_gaschutz;
    e["oracle_splitting"] = v.oracle_splitting;
    e["boundary_case"] = v.boundary_case;
    e["agreement"] = v.agreement;
    return e;
}

template <FieldScalar K>
ReportResult run_report_typed(const AlgebraSpec<K>& alg, const CellDatum& cd,
                              const std::string& field, const ReportOptions& opts) {
    ReportResult res;
    Json& doc = res.doc;
    doc["tool"] = "cellfrob";
    doc["format_version"] = 1;

    Json input;
    input["field"] = field;
    input["dim"] = alg.dim;
    input["basis"] = alg.basis_labels;
    Json cells_meta = Json::array();
    for (std::size_t c = 0; c < cd.cell_count(); ++c)
        cells_meta.push_back(Json{{"label", cd.cell_labels[c]}, {"members", cd.members[c]}});
    input["cells"] = std::move(cells_meta);
    Json poset = Json::array();
    for (const auto& [a, b] : cd.less)
        poset.push_back(Json::array({cd.cell_labels[a], cd.cell_labels[b]}));
    input["poset"] = std::move(poset);
    input["member_order"] = "as listed in the input file; Gram rows and columns follow it";
    doc["input"] = std::move(input);

    Json validation;
    ValidationReport alg_rep = validate_algebra(alg);
    validation["algebra"] = Json{{"ok", alg_rep.ok()}, {"checks", json_checks(alg_rep)}};
    if (!alg_rep.ok()) {
        doc["validation"] = std::move(validation);
        doc["headline"] = "validation failed: the input is not a Frobenius algebra";
        doc["status"] = Json{{"valid", false}, {"exit_code", 1}};
        res.exit_code = 1;
        return res;
    }

    ValidationReport cell_rep = validate_cellular(alg, cd);
    validation["cellular"] = Json{{"ok", cell_rep.ok()}, {"checks", json_checks(cell_rep)}};
    doc["validation"] = std::move(validation);
    if (!cell_rep.ok()) {
        doc["headline"] = "validation failed: the basis is not cellular for the given datum";
        doc["status"] = Json{{"valid", false}, {"exit_code", 1}};
        res.exit_code = 1;
        return res;
    }

    if (!opts.full) {
        doc["headline"] = "validation passed";
        doc["status"] = Json{{"valid", true}, {"exit_code", 0}};
        return res;
    }

    DualBases<K> db = dual_bases(alg);
    Json duals;
    duals["right_dual"] = json_matrix(db.right_dual);
    duals["left_dual"] = json_matrix(db.left_dual);
    duals["nakayama"] = json_matrix(db.nakayama);
    duals["nakayama_automorphism_ok"] = nakayama_check(alg, db);
    doc["dual_bases"] = std::move(duals);

    Section4Report s4 = check_section4(alg, cd, db);
    Json s4j;
    s4j["d_basis_cellular_opposite_order"] = s4.d_cellular;
    s4j["D_basis_cellular_opposite_order"] = s4.D_cellular;
    s4j["section4_ok"] = s4.section4_ok;
    s4j["involution_transposes_duals"] = s4.involution_ok;
    s4j["lemma41_ok"] = s4.lemma41_ok ? Json(*s4.lemma41_ok) : Json(nullptr);
    doc["section4"] = std::move(s4j);

    std::vector<std::string> boundary_cells;
    std::vector<std::string> disagreements;
    std::vector<std::string> projective_cells;

    Json cells = Json::array();
    for (std::size_t c = 0; c < cd.cell_count(); ++c) {
        Json cell;
        cell["label"] = cd.cell_labels[c];
        cell["members"] = cd.members[c];
        cell["n"] = cd.cell_size(c);
        Matrix<K> g = phi_gram(alg, cd, c);
        Matrix<K> gp = psi_gram(alg, cd, db, c);
        cell["gram"] = json_matrix(g);
        cell["gram_prime"] = json_matrix(gp);
        SimpleData sd = simple_data(alg, cd, c);
        cell["rank_gram"] = sd.rank_g;
        cell["dim_simple"] = sd.dim_simple;
        cell["in_lambda0"] = sd.in_lambda0;
        KLambdaResult<K> k = k_lambda(alg, cd, db, s4, c);
        Json kj;
        kj["defined"] = k.defined;
        if (k.defined)
            kj["value"] = k.value.str();
        else
            kj["reason"] = k.reason;
        Json per_t = Json::array();
        for (const K& s : k.per_t) per_t.push_back(s.str());
        kj["per_t_sums"] = std::move(per_t);
        cell["k"] = std::move(kj);
        cell["c_matrix"] = json_matrix(c_matrix(alg, cd, db, c));

        Json verdicts;
        for (CellFlavor f : {CellFlavor::C, CellFlavor::d}) {
            ProjectivityVerdict v = decide(alg, cd, db, s4, c, f);
            verdicts[flavor_name(f)] = json_verdict(v);
            std::string tag = cd.cell_labels[c] + std::string("/") + flavor_name(f);
            if (v.boundary_case) boundary_cells.push_back(tag);
            if (!v.agreement) disagreements.push_back(tag);
            if (f == CellFlavor::C && v.oracle_gaschutz) projective_cells.push_back(cd.cell_labels[c]);
        }
        cell["verdicts"] = std::move(verdicts);
        cells.push_back(std::move(cell));
    }
    doc["cells"] = std::move(cells);

    Json identities;
    Json l31 = Json::array();
    bool identities_ok = true;
    for (const auto& item : lemma31_suite(alg, cd, db)) {
        identities_ok &= item.passed;
        l31.push_back(json_check(item));
    }
    identities["lemma31"] = std::move(l31);
    CheckResult transport = alpha_transport_check(alg, cd, db);
    identities_ok &= transport.passed;
    identities["alpha_transport"] = json_check(transport);
    CheckResult tind = dc_element_t_independence(alg, cd, db);
    identities_ok &= tind.passed;
    identities["dc_element_t_independence"] = json_check(tind);
    if (s4.section4_ok) {
        CheckResult l42 = lemma42_check(alg, cd, db);
        identities_ok &= l42.passed;
        identities["lemma42"] = json_check(l42);
    } else {
        identities["lemma42"] = Json{{"name", "lemma42_idempotent_scaling"},
                                     {"skipped", "section-4 hypotheses fail"}};
    }
    Json constants = Json::array();
    if (s4.hypotheses_ok()) {
        for (std::size_t c = 0; c < cd.cell_count(); ++c) {
            KLambdaResult<K> k = k_lambda(alg, cd, db, s4, c);
            Matrix<K> ke = k.value * Matrix<K>::identity(cd.cell_size(c), alg.one());
            bool gg = phi_gram(alg, cd, c) * psi_gram(alg, cd, db, c) == ke;
            bool cm = c_matrix(alg, cd, db, c) == ke;
            identities_ok &= gg && cm;
            constants.push_back(Json{{"cell", cd.cell_labels[c]},
                                     {"k", k.value.str()},
                                     {"gram_product_is_kE", gg},
                                     {"c_matrix_is_kE", cm}});
        }
    }
    identities["section4_constants"] = std::move(constants);
    doc["identities"] = std::move(identities);

    if (projective_cells.empty())
        doc["headline"] = "none of the cell modules is projective";
    else if (projective_cells.size() == cd.cell_count())
        doc["headline"] = "every cell module is projective";
    else {
        std::string h = "projective cell modules:";
        for (const auto& p : projective_cells) h += " " + p;
        doc["headline"] = h;
    }

    Json status;
    status["valid"] = true;
    status["boundary_cases"] = boundary_cells;
    status["disagreements"] = disagreements;
    status["identity_suite_ok"] = identities_ok;
    res.exit_code = (!disagreements.empty() || !identities_ok) ? 3 : 0;
    status["exit_code"] = res.exit_code;
    doc["status"] = std::move(status);
    return res;
}

template <FieldScalar K>
Json oracle_report_typed(const AlgebraSpec<K>& alg, const CellDatum& cd,
                         const std::string& cell_label, const std::string& flavor) {
    auto c = cd.find_cell(cell_label);
    if (!c) throw ParseError("unknown cell '" + cell_label + "'");
    if (flavor != "C" && flavor != "d") throw ParseError("flavor must be C or d");
    ValidationReport alg_rep = validate_algebra(alg);
    if (!alg_rep.ok()) throw ValidationError("algebra axioms fail; no oracle run");
    ValidationReport cell_rep = validate_cellular(alg, cd);
    if (!cell_rep.ok()) throw ValidationError("cellular axioms fail; no oracle run");
    CellModule<K> mod = cell_module(alg, cd, *c, flavor == "C" ? CellFlavor::C : CellFlavor::d);
    DualBases<K> db = dual_bases(alg);
    bool gas = gaschutz_oracle(alg, db, mod);
    bool split = splitting_oracle(alg, mod);
    Json out;
    out["cell"] = cell_label;
    out["flavor"] = flavor;
    out["dim"] = mod.dim;
    out["oracle_gaschutz"] = gas;
    out["oracle_splitting"] = split;
    out["oracles_agree"] = gas == split;
    out["projective"] = gas;
    return out;
}

void render_checks(std::ostringstream& os, const Json& checks, const std::string& indent) {
    for (const auto& c : checks) {
        os << indent << (c["passed"].get<bool>() ? "[pass] " : "[FAIL] ")
           << c["name"].get<std::string>();
        if (c.contains("witness")) os << "  -- " << c["witness"].get<std::string>();
        os << "\n";
    }
}

void render_matrix(std::ostringstream& os, const Json& m, const std::string& indent) {
    for (const auto& row : m) {
        os << indent << "[";
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? " " : "") << row[i].get<std::string>();
        os << "]\n";
    }
}

} // namespace

ReportResult run_report(const ParsedInput& input, const ReportOptions& opts) {
    std::string field = field_name(input);
    return std::visit(
        [&](const auto& in) { return run_report_typed(in.alg, in.cd, field, opts); }, input);
}

Json oracle_report(const ParsedInput& input, const std::string& cell_label,
                   const std::string& flavor) {
    return std::visit(
        [&](const auto& in) { return oracle_report_typed(in.alg, in.cd, cell_label, flavor); },
        input);
}

std::string render_human(const Json& doc) {
    std::ostringstream os;
    os << "cellfrob report\n";
    os << "===============\n";
    if (doc.contains("input")) {
        const Json& input = doc["input"];
        os << "field: " << input["field"].get<std::string>() << ", dim " << input["dim"] << "\n";
        os << "basis:";
        for (const auto& b : input["basis"]) os << " " << b.get<std::string>();
        os << "\ncells:";
        for (const auto& c : input["cells"]) {
            os << " " << c["label"].get<std::string>() << "(";
            const auto& mem = c["members"];
            for (std::size_t i = 0; i < mem.size(); ++i)
                os << (i ? "," : "") << mem[i].get<std::string>();
            os << ")";
        }
        os << "\n";
    }
    if (doc.contains("validation")) {
        os << "\nvalidation\n----------\n";
        if (doc["validation"].contains("algebra")) {
            os << "algebra axioms:\n";
            render_checks(os, doc["validation"]["algebra"]["checks"], "  ");
        }
        if (doc["validation"].contains("cellular")) {
            os << "cellular axioms:\n";
            render_checks(os, doc["validation"]["cellular"]["checks"], "  ");
        }
    }
    if (doc.contains("dual_bases")) {
        os << "\ndual bases\n----------\n";
        os << "right dual (column j = d_j):\n";
        render_matrix(os, doc["dual_bases"]["right_dual"], "  ");
        os << "left dual (column j = D_j):\n";
        render_matrix(os, doc["dual_bases"]["left_dual"], "  ");
        os << "nakayama map:\n";
        render_matrix(os, doc["dual_bases"]["nakayama"], "  ");
        os << "nakayama automorphism checks: "
           << (doc["dual_bases"]["nakayama_automorphism_ok"].get<bool>() ? "pass" : "FAIL") << "\n";
    }
    if (doc.contains("section4")) {
        const Json& s4 = doc["section4"];
        os << "\nsection-4 hypotheses\n--------------------\n";
        os << "  d basis cellular w.r.t. opposite order: "
           << (s4["d_basis_cellular_opposite_order"].get<bool>() ? "yes" : "no") << "\n";
        os << "  D basis cellular w.r.t. opposite order: "
           << (s4["D_basis_cellular_opposite_order"].get<bool>() ? "yes" : "no") << "\n";
        os << "  involution transposes dual cell indices: "
           << (s4["involution_transposes_duals"].get<bool>() ? "yes" : "no") << "\n";
        os << "  nakayama fixes cells mod lower terms: "
           << (s4["lemma41_ok"].is_null() ? "not checked"
                                          : (s4["lemma41_ok"].get<bool>() ? "yes" : "NO"))
           << "\n";
    }
    if (doc.contains("cells")) {
        for (const auto& cell : doc["cells"]) {
            os << "\ncell " << cell["label"].get<std::string>() << " (n = " << cell["n"] << ")\n";
            os << "--------\n";
            os << "G:\n";
            render_matrix(os, cell["gram"], "  ");
            os << "G':\n";
            render_matrix(os, cell["gram_prime"], "  ");
            os << "rank G = " << cell["rank_gram"] << ", dim L = " << cell["dim_simple"]
               << ", in Lambda_0: " << (cell["in_lambda0"].get<bool>() ? "yes" : "no") << "\n";
            const Json& k = cell["k"];
            if (k["defined"].get<bool>())
                os << "k = " << k["value"].get<std::string>() << "\n";
            else
                os << "k undefined (" << k["reason"].get<std::string>() << ")\n";
            os << "c-matrix:\n";
            render_matrix(os, cell["c_matrix"], "  ");
            for (const auto& [flv, v] : cell["verdicts"].items()) {
                os << "W_" << flv << ": " << v["simplicity"].get<std::string>() << "; c: "
                   << v["criterion_c"]["verdict"].get<std::string>() << "; literal: "
                   << v["criterion_psi"]["verdict"].get<std::string>() << "; k: "
                   << v["criterion_k"]["verdict"].get<std::string>() << "; oracles: "
                   << (v["oracle_gaschutz"].get<bool>() ? "projective" : "not projective") << "/"
                   << (v["oracle_splitting"].get<bool>() ? "projective" : "not projective");
                if (v["boundary_case"].get<bool>()) os << "  [literal-test boundary case]";
                if (!v["agreement"].get<bool>()) os << "  [DISAGREEMENT]";
                os << "\n";
            }
        }
    }
    if (doc.contains("identities")) {
        os << "\nidentity suites\n---------------\n";
        render_checks(os, doc["identities"]["lemma31"], "  ");
        render_checks(os, Json::array({doc["identities"]["alpha_transport"],
                                       doc["identities"]["dc_element_t_independence"]}),
                      "  ");
        const Json& l42 = doc["identities"]["lemma42"];
        if (l42.contains("skipped"))
            os << "  [skip] " << l42["name"].get<std::string>() << "  -- "
               << l42["skipped"].get<std::string>() << "\n";
        else
            render_checks(os, Json::array({l42}), "  ");
        for (const auto& c : doc["identities"]["section4_constants"]) {
            os << "  cell " << c["cell"].get<std::string>() << ": k = "
               << c["k"].get<std::string>() << ", G G' = kE: "
               << (c["gram_product_is_kE"].get<bool>() ? "pass" : "FAIL") << ", I = kE: "
               << (c["c_matrix_is_kE"].get<bool>() ? "pass" : "FAIL") << "\n";
        }
    }
    if (doc.contains("headline"))
        os << "\nheadline: " << doc["headline"].get<std::string>() << "\n";
    if (doc.contains("status")) {
        const Json& st = doc["status"];
        if (st.contains("boundary_cases") && !st["boundary_cases"].empty()) {
            os << "boundary cases:";
            for (const auto& b : st["boundary_cases"]) os << " " << b.get<std::string>();
            os << "\n";
        }
        if (st.contains("disagreements") && !st["disagreements"].empty()) {
            os << "DISAGREEMENTS:";
            for (const auto& d : st["disagreements"]) os << " " << d.get<std::string>();
            os << "\n";
        }
        os << "exit code: " << st["exit_code"] << "\n";
    }
    return os.str();
}

} // namespace cellfrob
