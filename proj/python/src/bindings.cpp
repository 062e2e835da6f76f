#include "mtprove/analysis.hpp"
#include "mtprove/certificate_io.hpp"
#include "mtprove/syntax.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mtprove;

namespace {

py::dict prove(const std::string& goal_text, const std::optional<std::string>& script_text, int precision) {
    if (precision < 20) throw py::value_error("precision must be at least 20 digits");
    const Goal goal = parse_goal(goal_text);
    std::optional<Script> script;
    if (script_text) script = parse_script(*script_text);
    py::dict out;
    py::gil_scoped_release release;
    std::string status, message, document;
    try {
        if (auto c = numeric_falsify(goal)) {
            status = "disproved";
            message = "value " + c->value.str(10) + " at " + c->point.str(20);
        } else {
            ProverConfig cfg;
            cfg.prec = Precision{20, precision};
            const Certificate cert = script ? run_script(goal, *script, cfg) : auto_certificate(goal, cfg);
            const CheckResult check = verify_certificate(cert, cfg.prec);
            if (!check.accepted) throw Error("internal check rejected the certificate: " + check.reason);
            status = "proved";
            document = to_json(cert);
        }
    } catch (const Disproved& e) {
        status = "disproved";
        message = e.what();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        status = "failed";
        message = e.what();
    }
    py::gil_scoped_acquire acquire;
    out["status"] = status;
    out["message"] = message;
    out["certificate"] = document.empty() ? py::object(py::none()) : py::object(py::str(document));
    return out;
}

py::tuple check(const std::string& document) {
    CheckOutcome r;
    {
        py::gil_scoped_release release;
        r = check_document(document);
    }
    const char* kind = r.kind == CheckOutcome::Accepted ? "accepted" : r.kind == CheckOutcome::Rejected ? "rejected" : "input-error";
    return py::make_tuple(kind, r.message);
}

py::list limits() {
    py::list out;
    for (const auto& r : conjecture_limits()) {
        py::list rows;
        for (const auto& row : r.rows)
            rows.append(py::dict(py::arg("k") = row.k, py::arg("value") = row.value.convert_to<double>(),
                                 py::arg("error") = row.error.convert_to<double>(),
                                 py::arg("extrapolated") = row.extrapolated.convert_to<double>(),
                                 py::arg("extrapolated_error") = row.extrapolated_error.convert_to<double>()));
        out.append(py::dict(py::arg("name") = r.name, py::arg("expected") = format(r.expected, Var::X),
                            py::arg("expected_value") = eval(r.expected, Real(0)).convert_to<double>(),
                            py::arg("converges") = limit_converges(r, 6, Real("1e-3")), py::arg("rows") = rows));
    }
    return out;
}

py::dict fourier(const std::string& text) {
    const ParsedExpr p = parse_expr(text);
    const Var v = p.var.value_or(Var::T);
    const FourierForm f = to_fourier_form(p.expr);
    py::dict cos, sin;
    for (const auto& [k, c] : f.cos) cos[py::int_(k)] = format(MTPExpr::from_poly(c), v);
    for (const auto& [k, c] : f.sin) sin[py::int_(k)] = format(MTPExpr::from_poly(c), v);
    return py::dict(py::arg("constant") = format(MTPExpr::from_poly(f.constant), v), py::arg("cos") = cos,
                    py::arg("sin") = sin);
}

} // namespace

PYBIND11_MODULE(_mtprove, m) {
    m.doc() = "Prover for strict positivity of mixed trigonometric polynomials";
    static py::exception<Error> error(m, "MtproveError", PyExc_RuntimeError);
    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            parse_error(e.what());
        } catch (const Error& e) {
            error(e.what());
        }
    });

    m.def("prove", &prove, py::arg("goal"), py::arg("script") = py::none(), py::arg("precision") = 10000,
          "Prove a goal given as '<expr> > 0 on (lo, hi]'. Returns a dict with status, message and certificate.");
    m.def("check", &check, py::arg("document"), "Verify a certificate document; returns (verdict, message).");
    m.def("limits", &limits, "Limit estimates of the two conjecture ratios at x = 1 - 10^-k.");
    m.def("fourier", &fourier, py::arg("expr"), "Product-to-sum normal form of a sin/cos expression.");
    m.def("pipoly_sign", [](const std::string& text) { return pipoly_sign(parse_constant(text)); }, py::arg("value"),
          "Exact sign of an element of Q[pi] such as 'pi^2 + pi - 8'.");
    m.def("canonical", [](const std::string& text) {
        const ParsedExpr p = parse_expr(text);
        return format(p.expr, p.var.value_or(Var::T));
    }, py::arg("expr"), "Canonical text of an expression.");
    m.def("samples", [](const std::string& goal, int n) { return sample_plot_data(parse_goal(goal), n); },
          py::arg("goal"), py::arg("n"), "CSV samples of the goal expression at cell midpoints.");
}
