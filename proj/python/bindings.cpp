#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pav/demo.hpp"
#include "pav/json_io.hpp"
#include "pav/symplectic_f2.hpp"

namespace py = pybind11;
using namespace pav;

namespace {

py::object py_int(const Int& v) {
  return py::module_::import("builtins").attr("int")(v.get_str());
}

py::list py_type(const PolType& t) {
  py::list out;
  for (const Int& d : t) out.append(py_int(d));
  return out;
}

PolType type_from(const std::vector<long long>& t) {
  PolType out;
  for (long long d : t) out.push_back(Int(static_cast<long>(d)));
  return out;
}

FiniteSubgroup subgroup_from(const PolarizedLattice& p,
                             const std::vector<std::vector<std::string>>& gens) {
  std::vector<TorsionPoint> pts;
  for (const auto& row : gens) {
    if (static_cast<int>(row.size()) != p.n())
      throw Error("UsageError", "generator length must be 2g", "subgroup");
    QVec v(p.n());
    for (int i = 0; i < p.n(); ++i) v[i] = parse_rat(row[i], "subgroup");
    pts.push_back(reduce_point(std::move(v)));
  }
  return make_subgroup(p, pts);
}

PolarizedLattice doubled_quotient(const PolarizedLattice& x, const FiniteSubgroup& h) {
  PolarizedLattice x2 = rescale_form(x, 2);
  FiniteSubgroup h2(x2, h.lift());
  return quotient_by_subgroup(x2, h2, PairContext::kernel()).quotient;
}

py::tuple report_tuple(const VerifyReport& r) {
  return py::make_tuple(r.pass(), r.to_json().dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact lattice models of polarized abelian varieties";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, (e.code + ": " + e.what()).c_str());
    }
  });

  py::class_<PolarizedLattice>(m, "PolarizedLattice")
      .def_static("from_json",
                  [](const std::string& s) {
                    return lattice_from_json(nlohmann::json::parse(s), "");
                  })
      .def("to_json", [](const PolarizedLattice& p) { return lattice_to_json(p).dump(); })
      .def_property_readonly("g", &PolarizedLattice::g)
      .def_property_readonly("type", [](const PolarizedLattice& p) { return py_type(p.type()); })
      .def_property_readonly("degree", [](const PolarizedLattice& p) { return py_int(p.degree()); })
      .def("__repr__", [](const PolarizedLattice& p) {
        std::string s = "PolarizedLattice(type=[";
        const PolType& t = p.type();
        for (std::size_t i = 0; i < t.size(); ++i)
          s += (i ? "," : "") + t[i].get_str();
        return s + "])";
      });

  m.def("standard_principal", &standard_principal, py::arg("g"));
  m.def(
      "standard_polarized",
      [](const std::vector<long long>& t) { return standard_polarized(type_from(t)); },
      py::arg("type"));
  m.def(
      "random_polarized",
      [](int g, const std::vector<long long>& t, std::uint64_t seed) {
        return random_polarized(g, type_from(t), seed);
      },
      py::arg("g"), py::arg("type"), py::arg("seed"));
  m.def("dual", &dual_polarized, py::arg("lattice"));
  m.def(
      "dual_type",
      [](const std::vector<long long>& t) { return py_type(dual_type(type_from(t))); },
      py::arg("type"));
  m.def(
      "rescale", [](const PolarizedLattice& p, long m) { return rescale_form(p, Int(m)); },
      py::arg("lattice"), py::arg("m"));

  m.def(
      "quotient_doubled",
      [](const PolarizedLattice& p, const std::vector<std::vector<std::string>>& gens) {
        return doubled_quotient(p, subgroup_from(p, gens));
      },
      py::arg("lattice"), py::arg("generators"),
      "quotient of (lattice, 2E) by the lifted subgroup");

  m.def(
      "kernel_order",
      [](const PolarizedLattice& p) { return py_int(kernel_subgroup(p).order()); },
      py::arg("lattice"));
  m.def(
      "kernel_structure",
      [](const PolarizedLattice& p) { return py_type(kernel_subgroup(p).structure()); },
      py::arg("lattice"));

  m.def(
      "pairing_q",
      [](const PolarizedLattice& p, const std::vector<std::string>& x,
         const std::vector<std::string>& y) {
        QVec a(p.n()), b(p.n());
        if (static_cast<int>(x.size()) != p.n() || static_cast<int>(y.size()) != p.n())
          throw Error("UsageError", "points must have length 2g", "pairing_q");
        for (int i = 0; i < p.n(); ++i) {
          a[i] = parse_rat(x[i], "x");
          b[i] = parse_rat(y[i], "y");
        }
        return rat_str(pairing(p, reduce_point(a), reduce_point(b), PairContext::kernel()).q);
      },
      py::arg("lattice"), py::arg("x"), py::arg("y"),
      "Riemann-form exponent q(x, y) on K(L), as an exact rational string");

  m.def(
      "verify_lemma_ker",
      [](const PolarizedLattice& p, const std::vector<std::vector<std::string>>& gens) {
        return report_tuple(verify_lemma_ker(p, subgroup_from(p, gens)));
      },
      py::arg("lattice"), py::arg("generators"));
  m.def(
      "verify_dual_quotient",
      [](const PolarizedLattice& p, const std::vector<std::vector<std::string>>& gens) {
        return report_tuple(verify_dual_quotient_identity(p, subgroup_from(p, gens)));
      },
      py::arg("lattice"), py::arg("generators"));
  m.def(
      "verify_pullback",
      [](const PolarizedLattice& p, const std::vector<std::vector<std::string>>& gens) {
        return report_tuple(verify_pullback_lemmas(p, subgroup_from(p, gens)));
      },
      py::arg("lattice"), py::arg("generators"));

  m.def(
      "degree_ledger",
      [](const PolarizedLattice& p, const std::vector<std::vector<std::string>>& gens) {
        FiniteSubgroup h = subgroup_from(p, gens);
        DegreeLedger l = degree_ledger(p, h, p, h);
        py::dict d;
        d["deg_f_d"] = py_int(l.deg_f_d);
        d["deg_lambda"] = py_int(l.deg_lambda);
        d["deg_f_c_dual"] = py_int(l.deg_f_c_dual);
        d["composite"] = py_int(l.composite);
        d["type_c"] = py_type(l.type_c);
        d["type_d"] = py_type(l.type_d);
        d["obstruction_m"] =
            l.obstruction_m ? py_int(*l.obstruction_m) : py::object(py::none());
        return d;
      },
      py::arg("lattice"), py::arg("generators"));
  m.def(
      "multiplication_obstruction",
      [](long deg, int g) {
        std::optional<Int> m = multiplication_degree_obstruction(Int(deg), g);
        return m ? py_int(*m) : py::object(py::none());
      },
      py::arg("degree"), py::arg("g"));

  m.def(
      "census_count",
      [](int dim, int jobs) {
        if (dim < 2 || dim % 2 != 0 || dim > 20)
          throw Error("UsageError", "dim must be an even integer in [2, 20]", "census_count");
        SymplecticSpaceF2 sp = from_torsion(standard_principal(dim / 2));
        return sp.enumerate_isotropic_planes(jobs).size();
      },
      py::arg("dim"), py::arg("jobs") = 1);
  m.def(
      "census_oracle",
      [](int dim) {
        if (dim < 2 || dim % 2 != 0 || dim > 20)
          throw Error("UsageError", "dim must be an even integer in [2, 20]", "census_oracle");
        SymplecticSpaceF2 sp = from_torsion(standard_principal(dim / 2));
        return sp.count_isotropic_planes_oracle();
      },
      py::arg("dim"));

  m.def("paper_tower", []() { return cover_to_json(paper_tower().cover).dump(); });
  m.def(
      "random_tower",
      [](int g_c, int r, std::uint64_t seed) {
        return cover_to_json(random_tower(g_c, r, seed).cover).dump();
      },
      py::arg("g_c"), py::arg("r"), py::arg("seed"));
  m.def(
      "bigonal",
      [](const std::string& cover) {
        TowerOf2Covers t = make_tower(cover_from_json(nlohmann::json::parse(cover), ""));
        return cover_to_json(bigonal(t).cover).dump();
      },
      py::arg("cover"));
  m.def(
      "tower_genera",
      [](const std::string& cover) {
        TowerOf2Covers t = make_tower(cover_from_json(nlohmann::json::parse(cover), ""));
        py::dict d;
        d["genus_d"] = genus(t.cover);
        d["genus_c"] = genus(block_cover(t));
        d["pi_ramification"] = pi_ramification(t);
        d["ramification_degree"] = ramification_degree(t.cover);
        return d;
      },
      py::arg("cover"));
  m.def(
      "prym_duality",
      [](const std::string& cover) {
        TowerOf2Covers t = make_tower(cover_from_json(nlohmann::json::parse(cover), ""));
        return report_tuple(prym_duality_check(t));
      },
      py::arg("cover"));
  m.def(
      "prym_numerics",
      [](int g_c, int r) {
        PrymNumerics p = prym_numerics(g_c, r);
        return py::make_tuple(p.dimension, py_type(p.type));
      },
      py::arg("g_c"), py::arg("r"));
  m.def(
      "moduli_dimensions",
      [](int g_abelian, int g_curve, int r) {
        ModuliDims d = moduli_dimensions(g_abelian, g_curve, r);
        return py::make_tuple(py_int(d.dim_abelian), d.dim_towers, d.dim_jacobians);
      },
      py::arg("g_abelian"), py::arg("g_curve"), py::arg("r"));

  m.def(
      "demo",
      [](std::uint64_t seed, int count, int jobs) {
        DemoReport d = run_demo(seed, count, jobs);
        return py::make_tuple(d.pass(), d.to_json().dump());
      },
      py::arg("seed") = 1, py::arg("count") = 100, py::arg("jobs") = 1);
}
