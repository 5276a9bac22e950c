#include "invder/cli.hpp"

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "invder/cohomology.hpp"
#include "invder/deformation.hpp"
#include "invder/extension.hpp"
#include "invder/json_io.hpp"
#include "invder/lie_algebra.hpp"
#include "invder/representation.hpp"

namespace invder {

namespace {

OrderedJson indices_json(const std::vector<std::size_t>& idx) {
    OrderedJson out = OrderedJson::array();
    for (std::size_t i : idx) out.push_back(i + 1);
    return out;
}

int emit(std::ostream& out, const OrderedJson& doc, bool ok) {
    out << render(doc);
    return ok ? 0 : 1;
}

int cmd_validate(const std::string& algebra, std::ostream& out) {
    RawAlgebra raw = load_raw_algebra(algebra);
    ValidationReport report = validate_structure(raw.dim, raw.constants, raw.delta);

    OrderedJson doc;
    doc["ok"] = report.ok;
    static const char* kChecks[] = {"antisymmetry", "jacobi", "delta_invertible", "leibniz",
                                    "inv_condition"};
    OrderedJson checks;
    for (const char* name : kChecks) {
        bool failed = false;
        for (const ValidationIssue& issue : report.issues) {
            if (issue.check == name) failed = true;
        }
        checks[name] = failed ? "fail" : "pass";
    }
    doc["checks"] = std::move(checks);
    OrderedJson issues = OrderedJson::array();
    for (const ValidationIssue& issue : report.issues) {
        OrderedJson entry;
        entry["check"] = issue.check;
        entry["indices"] = indices_json(issue.indices);
        entry["residual"] = vector_json(issue.residual);
        issues.push_back(std::move(entry));
    }
    doc["issues"] = std::move(issues);
    return emit(out, doc, report.ok);
}

int cmd_derivations(const std::string& algebra, bool delta_compatible, std::ostream& out) {
    InvDerStructure S = load_structure(algebra);
    std::vector<Matrix> basis =
        delta_compatible ? delta_derivation_space(S) : derivation_space(S.algebra());
    OrderedJson doc;
    doc["dim"] = basis.size();
    OrderedJson list = OrderedJson::array();
    for (const Matrix& m : basis) list.push_back(matrix_json(m));
    doc["basis"] = std::move(list);
    return emit(out, doc, true);
}

int cmd_twist(const std::string& algebra, std::ostream& out) {
    InvDerStructure S = load_structure(algebra);
    return emit(out, algebra_json(twist(S), S.delta()), true);
}

int cmd_check_rep(const std::string& algebra, const std::string& rep_path, std::ostream& out) {
    InvDerStructure S = load_structure(algebra);
    RepReport report = check_representation(load_representation(rep_path, S));
    OrderedJson doc;
    doc["ok"] = report.ok;
    OrderedJson violations = OrderedJson::array();
    for (const RepViolation& v : report.violations) {
        OrderedJson entry;
        entry["equation"] = v.equation;
        entry["indices"] = indices_json(v.indices);
        entry["residual"] = matrix_json(v.residual);
        violations.push_back(std::move(entry));
    }
    doc["violations"] = std::move(violations);
    return emit(out, doc, report.ok);
}

int cmd_semidirect(const std::string& algebra, const std::string& rep_path, std::ostream& out) {
    InvDerStructure S = load_structure(algebra);
    InvDerStructure product = semidirect(load_representation(rep_path, S));
    return emit(out, algebra_json(product.algebra(), product.delta()), true);
}

Representation resolve_rep(const InvDerStructure& S, const std::string& spec, std::size_t vdim) {
    if (spec == "adjoint") return adjoint_rep(S);
    if (spec == "trivial") return trivial_rep(S, vdim, Matrix::identity(vdim));
    if (spec.rfind("file:", 0) == 0) return load_representation(spec.substr(5), S);
    throw InputError("--rep must be adjoint, trivial, or file:<path>");
}

int cmd_cohomology(const std::string& algebra, const std::string& rep_spec, std::size_t vdim,
                   int degree, std::ostream& out) {
    InvDerStructure S = load_structure(algebra);
    Representation r = resolve_rep(S, rep_spec, vdim);
    OrderedJson doc;
    if (degree == 1) {
        H1Result result = h1(r);
        doc["h1_dim"] = result.dim;
        OrderedJson basis = OrderedJson::array();
        for (const Cochain1& f : result.basis) basis.push_back(matrix_json(f));
        doc["h1_basis"] = std::move(basis);
    } else {
        H2Result result = h2(r);
        doc["z2_dim"] = result.z2_dim;
        doc["b2_dim"] = result.b2_dim;
        doc["h2_dim"] = result.dim;
        OrderedJson basis = OrderedJson::array();
        for (const InvDerCochain2& w : result.basis) basis.push_back(vector_json(flatten_invder2(w)));
        doc["h2_basis"] = std::move(basis);
    }
    return emit(out, doc, true);
}

OrderedJson deformation_report_json(const DeformationReport& report, std::size_t order) {
    OrderedJson doc;
    doc["ok"] = report.ok;
    doc["order"] = order;
    OrderedJson violations = OrderedJson::array();
    for (const DeformationViolation& v : report.violations) {
        OrderedJson entry;
        entry["order"] = v.order;
        entry["equation"] = v.equation;
        entry["indices"] = indices_json(v.indices);
        entry["residual"] = vector_json(v.residual);
        violations.push_back(std::move(entry));
    }
    doc["violations"] = std::move(violations);
    return doc;
}

int cmd_deform_check(const std::string& algebra, const std::string& deformation_path,
                     std::size_t order, bool order_given, std::ostream& out) {
    InvDerStructure S = load_structure(algebra);
    Deformation d = load_deformation(deformation_path, S);
    if (order_given) {
        if (order > d.order()) {
            throw InputError("--order exceeds the order of the deformation file");
        }
        std::vector<Cochain2> mu;
        std::vector<Matrix> delta;
        for (std::size_t i = 1; i <= order; ++i) {
            mu.push_back(d.mu(i));
            delta.push_back(d.delta(i));
        }
        d = Deformation(S, std::move(mu), std::move(delta));
    }
    DeformationReport report = check_deformation(d);
    return emit(out, deformation_report_json(report, d.order()), report.ok);
}

int cmd_deform_equiv(const std::string& algebra, const std::string& deformation_path,
                     const std::string& psi_path, std::ostream& out) {
    InvDerStructure S = load_structure(algebra);
    Deformation d = load_deformation(deformation_path, S);
    Matrix psi = load_matrix_file(psi_path);
    if (psi.rows() != S.dim() || psi.cols() != S.dim()) {
        throw InputError(psi_path + ": psi must be a square matrix of the base dimension");
    }
    return emit(out, deformation_json(apply_order1_equivalence(d, psi)), true);
}

OrderedJson extension_report_json(const ExtensionReport& report) {
    OrderedJson doc;
    doc["ok"] = report.ok;
    doc["in_cocycle_space"] = report.in_cocycle_space;
    OrderedJson issues = OrderedJson::array();
    for (const ValidationIssue& issue : report.issues) {
        OrderedJson entry;
        entry["check"] = issue.check;
        entry["indices"] = indices_json(issue.indices);
        entry["residual"] = vector_json(issue.residual);
        issues.push_back(std::move(entry));
    }
    doc["issues"] = std::move(issues);
    return doc;
}

int cmd_ext_check(const std::string& algebra, const std::string& cocycle_path, std::ostream& out) {
    InvDerStructure S = load_structure(algebra);
    ExtensionReport report = check_extension_cocycle(S, load_cocycle(cocycle_path, S.dim()));
    return emit(out, extension_report_json(report), report.ok);
}

int cmd_ext_build(const std::string& algebra, const std::string& cocycle_path, std::ostream& out) {
    InvDerStructure S = load_structure(algebra);
    CentralExtension E = build_extension(S, load_cocycle(cocycle_path, S.dim()));
    return emit(out, algebra_json(E.total().algebra(), E.total().delta()), true);
}

int cmd_ext_extract(const std::string& algebra, std::size_t base_dim,
                    const std::string& section_path, std::ostream& out) {
    InvDerStructure total = load_structure(algebra);
    CentralExtension E = CentralExtension::from_total(total, base_dim);
    ExtensionCocycle e =
        section_path.empty() ? extract_cocycle(E) : extract_cocycle(E, load_matrix_file(section_path));
    return emit(out, cocycle_json(e), true);
}

int cmd_ext_classify(const std::string& algebra, const std::string& first_path,
                     const std::string& second_path, std::ostream& out) {
    InvDerStructure S = load_structure(algebra);
    ExtensionCocycle e1 = load_cocycle(first_path, S.dim());
    ExtensionCocycle e2 = load_cocycle(second_path, S.dim());
    std::optional<Matrix> witness = same_class(S, e1, e2);
    OrderedJson doc;
    doc["same_class"] = witness.has_value();
    doc["witness"] = witness ? matrix_json(*witness) : OrderedJson(nullptr);
    return emit(out, doc, witness.has_value());
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact tools for Lie algebras with an invertible derivation"};
    app.require_subcommand(1);

    std::string algebra, rep_path, cocycle_path, cocycle2_path, deformation_path;
    std::string psi_path, section_path;
    std::string rep_spec = "adjoint";
    std::size_t vdim = 1;
    std::size_t order = 0;
    std::size_t base_dim = 0;
    int degree = 2;
    int result = 0;

    auto add_algebra = [&](CLI::App* sub) {
        sub->add_option("algebra", algebra, "Algebra file")->required();
    };

    CLI::App* validate = app.add_subcommand("validate", "Check all structure axioms");
    add_algebra(validate);
    validate->callback([&] { result = cmd_validate(algebra, out); });

    CLI::App* derivations = app.add_subcommand("derivations", "Basis of the derivation space");
    add_algebra(derivations);
    derivations->callback([&] { result = cmd_derivations(algebra, false, out); });

    CLI::App* delta_derivations =
        app.add_subcommand("delta-derivations", "Basis of the delta-derivation space");
    add_algebra(delta_derivations);
    delta_derivations->callback([&] { result = cmd_derivations(algebra, true, out); });

    CLI::App* twist_cmd = app.add_subcommand("twist", "Emit the twisted algebra");
    add_algebra(twist_cmd);
    twist_cmd->callback([&] { result = cmd_twist(algebra, out); });

    CLI::App* check_rep = app.add_subcommand("check-rep", "Check a representation file");
    add_algebra(check_rep);
    check_rep->add_option("rep", rep_path, "Representation file")->required();
    check_rep->callback([&] { result = cmd_check_rep(algebra, rep_path, out); });

    CLI::App* semidirect_cmd =
        app.add_subcommand("semidirect", "Emit the semidirect product with a representation");
    add_algebra(semidirect_cmd);
    semidirect_cmd->add_option("rep", rep_path, "Representation file")->required();
    semidirect_cmd->callback([&] { result = cmd_semidirect(algebra, rep_path, out); });

    CLI::App* cohomology = app.add_subcommand("cohomology", "Cohomology in degree 1 or 2");
    add_algebra(cohomology);
    cohomology->add_option("--rep", rep_spec, "adjoint, trivial, or file:<path>");
    cohomology->add_option("--vdim", vdim, "Dimension of the trivial coefficient space");
    cohomology->add_option("--degree", degree, "Cohomology degree")
        ->check(CLI::IsMember({1, 2}))
        ->required();
    cohomology->callback([&] { result = cmd_cohomology(algebra, rep_spec, vdim, degree, out); });

    CLI::App* deform_check = app.add_subcommand("deform-check", "Check a formal deformation");
    add_algebra(deform_check);
    deform_check->add_option("--deformation", deformation_path, "Deformation file")->required();
    CLI::Option* order_opt =
        deform_check->add_option("--order", order, "Check only up to this order");
    deform_check->callback([&] {
        result = cmd_deform_check(algebra, deformation_path, order, order_opt->count() > 0, out);
    });

    CLI::App* deform_equiv =
        app.add_subcommand("deform-equiv", "Transport a deformation along an order-1 equivalence");
    add_algebra(deform_equiv);
    deform_equiv->add_option("--deformation", deformation_path, "Deformation file")->required();
    deform_equiv->add_option("--psi", psi_path, "Matrix file with the order-1 map")->required();
    deform_equiv->callback(
        [&] { result = cmd_deform_equiv(algebra, deformation_path, psi_path, out); });

    CLI::App* ext_check = app.add_subcommand("ext-check", "Check extension cocycle data");
    add_algebra(ext_check);
    ext_check->add_option("--cocycle", cocycle_path, "Cocycle file")->required();
    ext_check->callback([&] { result = cmd_ext_check(algebra, cocycle_path, out); });

    CLI::App* ext_build = app.add_subcommand("ext-build", "Emit the central extension of a cocycle");
    add_algebra(ext_build);
    ext_build->add_option("--cocycle", cocycle_path, "Cocycle file")->required();
    ext_build->callback([&] { result = cmd_ext_build(algebra, cocycle_path, out); });

    CLI::App* ext_extract =
        app.add_subcommand("ext-extract", "Read the cocycle off a block extension");
    add_algebra(ext_extract);
    ext_extract->add_option("--base-dim", base_dim, "Dimension of the base block")->required();
    ext_extract->add_option("--section", section_path, "Optional section matrix file");
    ext_extract->callback([&] { result = cmd_ext_extract(algebra, base_dim, section_path, out); });

    CLI::App* ext_classify =
        app.add_subcommand("ext-classify", "Decide whether two cocycles are equivalent");
    add_algebra(ext_classify);
    ext_classify->add_option("first", cocycle_path, "First cocycle file")->required();
    ext_classify->add_option("second", cocycle2_path, "Second cocycle file")->required();
    ext_classify->callback(
        [&] { result = cmd_ext_classify(algebra, cocycle_path, cocycle2_path, out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CheckError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return result;
}

}  // namespace invder
