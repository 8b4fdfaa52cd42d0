#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypernorm/cost_calculus.hpp"
#include "hypernorm/errors.hpp"
#include "hypernorm/family_norm.hpp"
#include "hypernorm/hamming_entropy.hpp"
#include "hypernorm/projection.hpp"

namespace py = pybind11;

// Rationals cross the boundary as fractions.Fraction (ints accepted).
namespace pybind11::detail {

template <>
struct type_caster<hypernorm::Rational> {
  PYBIND11_TYPE_CASTER(hypernorm::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    object fraction = module_::import("fractions").attr("Fraction");
    if (!isinstance(src, fraction) && !PyLong_Check(src.ptr())) return false;
    object f = fraction(src);
    const std::string text =
        str(f.attr("numerator")).cast<std::string>() + "/" +
        str(f.attr("denominator")).cast<std::string>();
    value = hypernorm::parse_rational(text);
    return true;
  }

  static handle cast(const hypernorm::Rational& r, return_value_policy, handle) {
    object fraction = module_::import("fractions").attr("Fraction");
    return fraction(r.get_str()).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace hypernorm;

using Sets = std::vector<std::vector<std::size_t>>;

SetFamily make_family(std::size_t n, const Sets& sets) {
  std::vector<CoordSet> members;
  members.reserve(sets.size());
  for (const auto& s : sets) members.push_back(CoordSet::from_coordinates(s));
  return SetFamily(n, std::move(members));
}

Sets family_sets(const SetFamily& family) {
  Sets out;
  for (const auto& s : family.sets()) out.push_back(s.coordinates());
  return out;
}

FiniteRelation make_relation(const std::vector<std::uint32_t>& sizes,
                             const std::vector<Tuple>& tuples) {
  return FiniteRelation(sizes, tuples);
}

py::int_ to_int(const BigInt& z) {
  return py::module_::import("builtins").attr("int")(z.get_str());
}

py::tuple to_py(const Interval& i) { return py::make_tuple(i.lo, i.hi); }

py::dict to_py(const Comparison& c) {
  py::dict d;
  d["lhs"] = c.lhs;
  d["rhs"] = c.rhs;
  d["holds"] = c.holds();
  d["equality"] = c.equality();
  return d;
}

py::dict to_py(const CostReport& r) {
  py::dict d;
  std::vector<std::pair<std::size_t, std::size_t>> charges;
  for (const auto& c : r.charges) charges.emplace_back(c.position, c.stage);
  d["charges"] = charges;
  d["value"] = to_py(r.value);
  d["exact"] = r.exact;
  return d;
}

Rational precision_or_default(const std::optional<Rational>& p) {
  return p ? *p : default_precision();
}

CostFunction cost_of(const std::vector<Rational>& beta, const Rational& p) {
  return make_cost(LeftCEApprox(beta), p);
}

}  // namespace

PYBIND11_MODULE(_hypernorm, m) {
  m.doc() = "Exact set-family norms, projection inequalities and cost-function tools";

  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  m.def(
      "norm",
      [](std::size_t n, const Sets& sets) {
        const auto r = norm(make_family(n, sets));
        py::dict d;
        d["infinite"] = r.is_infinite();
        d["value"] = r.value ? py::cast(*r.value) : py::none();
        d["reciprocal"] = r.reciprocal();
        d["primal"] = r.primal ? py::cast(r.primal->values) : py::none();
        d["dual"] = r.dual ? py::cast(r.dual->values) : py::none();
        d["warnings"] = r.warnings;
        return d;
      },
      py::arg("n"), py::arg("sets"));
  m.def("k_subsets_family", [](std::size_t n, std::size_t k) { return family_sets(k_subsets_family(n, k)); });
  m.def("cyclic_family", [](std::size_t n, std::size_t k) { return family_sets(cyclic_family(n, k)); });
  m.def("degenerate_family", [](std::size_t n, std::size_t k) { return family_sets(degenerate_family(n, k)); });
  m.def("k_subsets_norm", &k_subsets_norm);
  m.def("degenerate_norm", &degenerate_norm);
  m.def("degenerate_certificates", [](std::size_t n, std::size_t k) {
    const auto [x, y] = degenerate_certificates(n, k);
    return py::make_tuple(x.values, y.values);
  });

  m.def(
      "shearer_check",
      [](const std::vector<std::uint32_t>& sizes, const std::vector<Tuple>& tuples, std::size_t n,
         const Sets& sets, std::optional<std::vector<Rational>> weighting) {
        const auto family = make_family(n, sets);
        Weighting w;
        if (weighting) {
          w.values = *weighting;
        } else {
          const auto r = norm(family);
          if (r.is_infinite()) throw DomainError("family contains the empty set");
          w = *r.primal;
        }
        const auto report = shearer_check(make_relation(sizes, tuples), family, w);
        py::dict d = to_py(report.comparison);
        d["relation_size"] = report.relation_size;
        d["projected_sizes"] = report.projected_sizes;
        d["weighting"] = w.values;
        return d;
      },
      py::arg("sizes"), py::arg("tuples"), py::arg("n"), py::arg("sets"),
      py::arg("weighting") = py::none());
  m.def(
      "geometric_witness",
      [](const std::vector<std::uint32_t>& sizes, const std::vector<Tuple>& tuples, std::size_t n,
         const Sets& sets) {
        const auto w = geometric_witness(make_relation(sizes, tuples), make_family(n, sets));
        py::dict d = to_py(w.comparison);
        d["index"] = w.index;
        d["set"] = w.set.coordinates();
        d["norm"] = w.norm;
        return d;
      },
      py::arg("sizes"), py::arg("tuples"), py::arg("n"), py::arg("sets"));
  m.def(
      "sharp_box",
      [](std::size_t n, const Sets& sets, const Rational& c) {
        const auto family = make_family(n, sets);
        const auto box = sharp_box(family, c);
        const auto report = sharpness_report(family, box, norm(family));
        py::dict d;
        d["base"] = box.base;
        d["exponents"] = box.exponents;
        d["target"] = report.target;
        d["projection_exponents"] = report.projection_exponents;
        d["dual_tight"] = report.dual_tight;
        d["ok"] = report.ok();
        return d;
      },
      py::arg("n"), py::arg("sets"), py::arg("c") = Rational(1, 2));
  m.def(
      "loomis_whitney",
      [](const std::vector<std::uint32_t>& sizes, const std::vector<Tuple>& tuples) {
        return to_py(loomis_whitney_check(make_relation(sizes, tuples)));
      },
      py::arg("sizes"), py::arg("tuples"));
  m.def("relative_size", [](const std::vector<std::uint32_t>& sizes, const std::vector<Tuple>& tuples) {
    return relative_size(make_relation(sizes, tuples));
  });

  m.def(
      "cost",
      [](const std::vector<Rational>& beta, const Rational& p, std::size_t x, std::size_t s,
         std::size_t bits) {
        const auto term = cost_of(beta, p)(x, s);
        if (const auto v = term.exact_value()) return py::cast(*v);
        return py::object(to_py(term.enclose(bits)));
      },
      py::arg("beta"), py::arg("p"), py::arg("x"), py::arg("s"), py::arg("bits") = 64);
  m.def(
      "total_cost",
      [](const std::vector<Rational>& beta, const Rational& p, const std::vector<std::string>& stages,
         std::optional<Rational> precision) {
        return to_py(total_cost(Approximation(stages), cost_of(beta, p), precision_or_default(precision)));
      },
      py::arg("beta"), py::arg("p"), py::arg("stages"), py::arg("precision") = py::none());
  m.def(
      "weak_total_cost",
      [](const std::vector<Rational>& beta, const Rational& p, const std::vector<std::string>& stages,
         std::optional<Rational> precision) {
        return to_py(weak_total_cost(Approximation(stages), cost_of(beta, p), precision_or_default(precision)));
      },
      py::arg("beta"), py::arg("p"), py::arg("stages"), py::arg("precision") = py::none());
  m.def(
      "i_weak_total_cost",
      [](const std::vector<Rational>& beta, const Rational& p, const std::vector<std::string>& stages,
         const std::vector<std::size_t>& indices, std::optional<Rational> precision) {
        return to_py(i_weak_total_cost(Approximation(stages), cost_of(beta, p),
                                       StageIndexSequence(indices), precision_or_default(precision)));
      },
      py::arg("beta"), py::arg("p"), py::arg("stages"), py::arg("indices"),
      py::arg("precision") = py::none());
  m.def("n_stages", [](const std::vector<std::string>& stages) { return n_stages(Approximation(stages)); });
  m.def(
      "change_set",
      [](const std::vector<std::string>& stages, const std::vector<std::size_t>& h) {
        const auto cs = change_set(Approximation(stages), h);
        return py::make_tuple(cs.set.stages(), cs.blocks.indices());
      },
      py::arg("stages"), py::arg("h"));

  m.def("hamming_density", [](const std::string& a, const std::string& b) { return hamming_density(a, b); });
  m.def(
      "entropy",
      [](const Rational& q, std::optional<Rational> precision) {
        return to_py(entropy(q, precision_or_default(precision)));
      },
      py::arg("q"), py::arg("precision") = py::none());
  m.def("ball_size", [](std::size_t n, const Rational& q) { return to_int(ball_size({n, q})); });
  m.def("ball_bound_check", [](std::size_t n, const Rational& q) {
    const auto b = ball_bound_check({n, q});
    py::dict d;
    d["verdict"] = std::string(b.verdict == Verdict::Hold      ? "hold"
                               : b.verdict == Verdict::Violate ? "violate"
                                                               : "undecided");
    d["equality"] = b.equality;
    d["ball"] = to_int(b.ball);
    d["bound"] = to_py(b.bound);
    return d;
  });
  m.def(
      "delta_threshold",
      [](const Rational& p, std::optional<Rational> precision) -> py::object {
        const auto d = delta_threshold(p, precision_or_default(precision));
        if (!d) return py::none();
        py::dict out;
        out["k"] = d->k;
        out["delta"] = d->delta;
        out["entropy_at_2delta"] = to_py(d->entropy_at_2delta);
        out["entropy_at_4delta"] =
            d->entropy_at_4delta ? py::object(to_py(*d->entropy_at_4delta)) : py::object(py::none());
        return out;
      },
      py::arg("p"), py::arg("precision") = py::none());
}
