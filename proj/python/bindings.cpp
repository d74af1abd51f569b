#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wilsonff/charsets.hpp"
#include "wilsonff/closedform.hpp"
#include "wilsonff/correspondence.hpp"
#include "wilsonff/dickson.hpp"
#include "wilsonff/evaluate.hpp"
#include "wilsonff/reciprocity.hpp"
#include "wilsonff/tables.hpp"
#include "wilsonff/verify.hpp"

namespace py = pybind11;
using namespace wilsonff;

namespace {

// Elements cross the boundary as ints for prime fields and coefficient tuples otherwise.
FieldElem to_elem(const FieldCtx& f, const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return f.from_int(h.cast<std::int64_t>());
  if (py::isinstance<py::str>(h)) return f.parse(h.cast<std::string>());
  std::vector<std::uint32_t> c;
  for (std::int64_t v : h.cast<std::vector<std::int64_t>>()) {
    c.push_back(static_cast<std::uint32_t>(((v % f.p()) + f.p()) % f.p()));
  }
  return f.from_coeffs(c);
}

py::object from_elem(const FieldCtx& f, FieldElem a) {
  const auto c = f.coeffs(a);
  if (f.n() == 1) return py::int_(c[0]);
  return py::tuple(py::cast(c));
}

SignPair to_signs(const std::string& s) {
  if (s.size() != 2) throw std::invalid_argument("signs must be two characters from '+-'");
  auto one = [](char c) {
    if (c == '+') return 1;
    if (c == '-') return -1;
    throw std::invalid_argument(std::string("bad sign '") + c + "'");
  };
  return {one(s[0]), one(s[1])};
}

py::object json_to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

SetFamily make_family(const FieldCtx& f, const std::string& kind, const py::handle& x, const py::object& y,
                      const std::string& signs) {
  if (kind == "S1") {
    if (signs != "+" && signs != "-") throw std::invalid_argument("S1 takes one sign");
    return SetFamily::S1(to_elem(f, x), signs == "+" ? 1 : -1);
  }
  if (y.is_none()) throw std::invalid_argument(kind + " takes two parameters");
  const FieldElem a = to_elem(f, x), b = to_elem(f, y);
  const SignPair s = to_signs(signs);
  if (kind == "A") return SetFamily::A(a, b, s);
  if (kind == "S2") return SetFamily::S2(a, b, s);
  if (kind == "T") return SetFamily::T(a, b, s);
  throw std::invalid_argument("unknown family '" + kind + "'");
}

TowerSpec tower_spec(const std::string& base, unsigned depth, unsigned k) {
  if (base == "sqrt2") return TowerSpec::sqrt2(depth);
  if (base == "sqrt3") return TowerSpec::sqrt3(depth);
  if (base == "golden") return TowerSpec::golden(depth);
  if (base == "bracket") return TowerSpec::bracket(k, depth);
  throw std::invalid_argument("base must be sqrt2, sqrt3, golden or bracket");
}

py::list poly_to_py(const FieldCtx& f, const Poly& p) {
  py::list out;
  for (FieldElem c : p.coeffs) out.append(from_elem(f, c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_wilsonff, m) {
  m.doc() = "Wilson-type products over finite fields";

  py::class_<FieldCtx>(m, "Field")
      .def(py::init([](std::uint32_t p, unsigned n) { return FieldCtx::make(p, n); }), py::arg("p"),
           py::arg("n") = 1)
      .def_property_readonly("p", &FieldCtx::p)
      .def_property_readonly("n", &FieldCtx::n)
      .def_property_readonly("q", &FieldCtx::q)
      .def_property_readonly("eps", &FieldCtx::eps)
      .def_property_readonly("m", &FieldCtx::m)
      .def("legendre", [](const FieldCtx& f, py::handle a) { return f.legendre(to_elem(f, a)); })
      .def("sqrt",
           [](const FieldCtx& f, py::handle a) -> py::object {
             const auto r = f.sqrt(to_elem(f, a));
             return r ? from_elem(f, *r) : py::none();
           })
      .def("elements",
           [](const FieldCtx& f) {
             py::list out;
             for (std::uint32_t i = 0; i < f.q(); ++i) out.append(from_elem(f, f.element(i)));
             return out;
           })
      .def("__repr__", [](const FieldCtx& f) {
        std::ostringstream os;
        os << "Field(p=" << f.p() << ", n=" << f.n() << ")";
        return os.str();
      });

  m.def(
      "brute_product",
      [](const FieldCtx& f, const std::string& kind, py::handle x, py::object y, const std::string& signs) {
        const SetFamily fam = make_family(f, kind, x, y, signs);
        const ProductReport r = brute_product(f, fam);
        py::dict out;
        out["value"] = from_elem(f, r.value);
        out["cardinality"] = r.cardinality;
        py::list members;
        if (r.members) {
          for (FieldElem a : *r.members) members.append(from_elem(f, a));
        }
        out["members"] = members;
        return out;
      },
      py::arg("field"), py::arg("kind"), py::arg("x"), py::arg("y") = py::none(), py::arg("signs") = "++");
  m.def(
      "card_closed",
      [](const FieldCtx& f, const std::string& kind, py::handle x, py::object y, const std::string& signs) {
        return card_closed(f, make_family(f, kind, x, y, signs));
      },
      py::arg("field"), py::arg("kind"), py::arg("x"), py::arg("y") = py::none(), py::arg("signs") = "++");
  m.def("prod_T", [](const FieldCtx& f, py::handle j, py::handle l, const std::string& signs) {
    return from_elem(f, rescale_T(f, to_elem(f, j), to_elem(f, l), to_signs(signs)));
  });
  m.def("prod_S", [](const FieldCtx& f, py::handle k, py::handle l, const std::string& signs) {
    return from_elem(f, prod_S_pair(f, to_elem(f, k), to_elem(f, l), to_signs(signs)));
  });
  m.def("prod_S_single", [](const FieldCtx& f, py::handle k, int sign) {
    return from_elem(f, prod_S_single(f, to_elem(f, k), sign));
  });
  m.def("quadruple_from_one",
        [](const FieldCtx& f, py::handle k, py::handle l, const std::string& known, py::handle value) {
          const Quadruple qd = quadruple_from_one(f, to_elem(f, k), to_elem(f, l), to_signs(known), to_elem(f, value));
          py::dict out;
          for (SignPair s : kAllSignPairs) out[py::str(to_string(s))] = from_elem(f, qd[s]);
          return out;
        });
  m.def("dickson_first", [](const FieldCtx& f, std::uint64_t k) { return poly_to_py(f, dickson_first(f, k)); });
  m.def("dickson_second", [](const FieldCtx& f, std::uint64_t k) { return poly_to_py(f, dickson_second(f, k)); });
  m.def("vanishing_poly", [](const FieldCtx& f, const std::string& signs) {
    const SignPair s = to_signs(signs);
    return poly_to_py(f, vanishing_poly(f, s.e1, s.e2));
  });
  m.def("orbit_count", [](const FieldCtx& f, const std::string& signs) {
    const SignPair s = to_signs(signs);
    return orbit_count_card(f, s.e1, s.e2);
  });
  m.def(
      "tower",
      [](const FieldCtx& f, const std::string& base, unsigned depth, unsigned k) {
        const TowerReport r = radical_tower_membership(f, tower_spec(base, depth, k));
        py::dict out;
        out["member"] = r.member;
        out["criterion"] = r.criterion;
        out["ok"] = r.ok();
        return out;
      },
      py::arg("field"), py::arg("base"), py::arg("depth"), py::arg("k") = 4);
  m.def("special_angle", [](const FieldCtx& f, unsigned d) {
    const SpecialAngle a = special_angle_bracket(f, d);
    py::dict out;
    out["value"] = a.value ? from_elem(f, *a.value) : py::none();
    out["ext_degree"] = a.ext_degree;
    out["ok"] = a.ok();
    return out;
  });
  m.def("sqrt2_class", [](const FieldCtx& f) {
    const Sqrt2Class c = sqrt2_tower_class(f);
    py::dict out;
    out["sqrt2_in_field"] = c.sqrt2_in_field;
    out["class"] = c.class_2_plus_sqrt2;
    out["expected"] = c.expected;
    out["class_next_level"] = c.class_next_level ? py::object(py::int_(*c.class_next_level)) : py::none();
    out["ok"] = c.ok;
    return out;
  });
  m.def(
      "irrational_products",
      [](const FieldCtx& f, const std::string& base, unsigned k) -> py::object {
        const IrrationalReport r = prod_T_quadratic_irrational(f, tower_spec(base, 0, k));
        if (!r.applicable) return py::none();
        py::list cases;
        for (const auto& c : r.cases) {
          py::dict d;
          d["b0"] = from_elem(f, c.b0);
          d["signs"] = to_string(c.signs);
          d["closed"] = from_elem(f, c.closed);
          d["brute"] = from_elem(f, c.brute);
          d["ok"] = c.ok;
          cases.append(d);
        }
        return cases;
      },
      py::arg("field"), py::arg("base"), py::arg("k") = 4);
  m.def("evaluate", [](const std::string& text, std::optional<std::uint32_t> p, std::optional<unsigned> n) {
    const FamilyText t = parse_family_text(text);
    const auto pp = p ? p : t.p;
    if (!pp) throw std::invalid_argument("no characteristic given");
    const FieldCtx f = FieldCtx::make(*pp, n.value_or(t.n.value_or(1)));
    return json_to_py(to_json(f, evaluate(f, resolve_family(f, t))));
  }, py::arg("spec"), py::arg("p") = py::none(), py::arg("n") = py::none());
  m.def(
      "table",
      [](const FieldCtx& f, int id, bool every_tau) { return json_to_py(to_json(f, emit_table(f, id, every_tau))); },
      py::arg("field"), py::arg("id"), py::arg("every_tau") = false);
  m.def(
      "verify",
      [](std::uint64_t qmin, std::uint64_t qmax, unsigned maxdeg, std::vector<std::string> suites, unsigned workers) {
        SweepConfig cfg;
        cfg.qmin = qmin;
        cfg.qmax = qmax;
        cfg.max_degree = maxdeg;
        if (!suites.empty()) cfg.suites = std::move(suites);
        cfg.workers = workers;
        std::ostringstream os;
        SweepSummary s;
        {
          py::gil_scoped_release release;
          s = run_verify(cfg, os);
        }
        py::list checks;
        std::istringstream in(os.str());
        for (std::string line; std::getline(in, line);) checks.append(json_to_py(nlohmann::json::parse(line)));
        py::dict out;
        out["fields"] = s.fields;
        out["checks"] = checks;
        out["failures"] = s.failures;
        out["ok"] = s.ok();
        return out;
      },
      py::arg("qmin") = 3, py::arg("qmax") = 50, py::arg("maxdeg") = 3, py::arg("suites") = std::vector<std::string>{},
      py::arg("workers") = 1);
  m.attr("SUITES") = kAllSuites;
}
