#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wordsys/experiment.hpp"

namespace py = pybind11;
using namespace wordsys;

namespace
{

using perm::FinSupportPerm;
using io::Json;

// JSON crosses the boundary as text so Python sees plain dicts and lists.
py::object toPython(Json const &j)
{ return py::module_::import("json").attr("loads")(j.dump()); }

Json fromPython(py::handle obj)
{ return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>()); }

words::Nu makeNu(std::vector<std::uint64_t> prefix, bool cycle)
{ return words::Nu(std::move(prefix), cycle ? words::Nu::Tail::Cycle : words::Nu::Tail::Zero); }

perm::Structure structureNamed(std::string const &name)
{
  if (name == "matching")
    return perm::matchingStructure();
  if (name == "trivial")
    return perm::trivialStructure();
  throw Error(ErrorKind::Precondition, "unknown structure '" + name + "'");
}

experiment::ExperimentConfig configFrom(py::kwargs const &kw)
{
  experiment::ExperimentConfig cfg;
  for (auto const &[key, value] : kw) {
    auto k = key.cast<std::string>();
    if (k == "d")
      cfg.dSpec = fromPython(value);
    else if (k == "nu")
      cfg.nuSpec = fromPython(value);
    else if (k == "scale")
      cfg.scaleSpec = fromPython(value);
    else if (k == "budget")
      cfg.budget = value.cast<unsigned>();
    else if (k == "window") {
      auto w = value.cast<std::pair<std::size_t, std::size_t>>();
      cfg.nWindow = w.first;
      cfg.mWindow = w.second;
    } else if (k == "count")
      cfg.count = value.cast<std::size_t>();
    else if (k == "basis")
      cfg.basis = value.cast<freegrp::Gen>();
    else if (k == "seed")
      cfg.seed = value.cast<std::uint64_t>();
    else if (k == "search_bound")
      cfg.searchBound = value.cast<std::size_t>();
    else if (k == "structure")
      cfg.structure = value.cast<std::string>();
    else
      throw py::type_error("unknown option '" + k + "'");
  }
  return cfg;
}

py::object witnessDict(scale::ObeysWitness const &w)
{ return toPython(io::toJson(w)); }

// Wraps the move-only limit so pybind11 can hold it.
struct Solution
{
  Solution(perm::DSeq d, words::Nu nu, unsigned budget, std::size_t searchBound)
  : L(d, words::nuWords(std::move(nu)), scale::Scale(d, budget), searchBound)
  {}

  solver::LimitAutomorphism L;
};

} // namespace

PYBIND11_MODULE(_wordsys, m)
{
  m.doc() = "Word-equation systems over permutation groups and free groups";

  // Library errors surface as WordsysError with the error kind in `.kind`.
  static PyObject *errorType =
    PyErr_NewException("wordsys._wordsys.WordsysError", PyExc_RuntimeError, nullptr);
  m.attr("WordsysError") = py::reinterpret_borrow<py::object>(errorType);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (Error const &e) {
      py::object inst = py::reinterpret_borrow<py::object>(errorType)(e.what());
      inst.attr("kind") = to_string(e.kind());
      PyErr_SetObject(errorType, inst.ptr());
    }
  });

  py::class_<FinSupportPerm>(m, "Perm")
    .def(py::init<>())
    .def(py::init([](std::vector<FinSupportPerm::Move> moves) {
           return FinSupportPerm::fromMoves(std::move(moves));
         }),
         py::arg("moves"))
    .def_static("cycle",
                [](std::vector<perm::Point> pts) {
                  return FinSupportPerm::cycle(std::span<perm::Point const>(pts));
                })
    .def_static("transposition", &FinSupportPerm::transposition)
    .def("__call__", &FinSupportPerm::operator())
    .def("preimage", &FinSupportPerm::preimage)
    .def("is_identity", &FinSupportPerm::isIdentity)
    .def("moves", [](FinSupportPerm const &f) {
      return std::vector<FinSupportPerm::Move>(f.moves().begin(), f.moves().end());
    })
    .def("support", &FinSupportPerm::support)
    .def("inverse", [](FinSupportPerm const &f) { return perm::inverse(f); })
    .def("__mul__", [](FinSupportPerm const &f, FinSupportPerm const &g) {
      return perm::compose(f, g);
    })
    .def("__pow__", [](FinSupportPerm const &f, std::int64_t e) { return perm::power(f, e); })
    .def(py::self == py::self)
    .def("__repr__", [](FinSupportPerm const &f) { return "Perm" + perm::toCycleString(f); })
    .def("__str__", &perm::toCycleString);

  m.def(
    "metric_exponent",
    [](FinSupportPerm const &f, FinSupportPerm const &g) { return perm::metric(f, g).exponent; },
    "n with metric(f, g) == 2^-n, or None when f == g");
  m.def("metric", [](FinSupportPerm const &f, FinSupportPerm const &g) {
    return perm::metric(f, g).toDouble();
  });
  m.def("is_automorphism", [](std::string const &structure, FinSupportPerm const &f) {
    return perm::isAutomorphism(structureNamed(structure), f);
  });

  py::class_<perm::DSeq>(m, "DSeq")
    .def_static("transpositions", &perm::DSeq::transpositions)
    .def_static("from_explicit",
                [](std::vector<FinSupportPerm> perms) {
                  return perm::DSeq::fromExplicit(std::move(perms));
                })
    .def_static("cauchy_to_null",
                [](std::vector<FinSupportPerm> c) {
                  return perm::cauchyToNull(std::span<FinSupportPerm const>(c));
                })
    .def_static("from_json", [](py::object spec) { return io::dseqFromJson(fromPython(spec)); })
    .def("at", &perm::DSeq::at)
    .def("mover_bound", &perm::DSeq::moverBound)
    .def("length", &perm::DSeq::length)
    .def("check_null", [](perm::DSeq const &d, std::size_t window) {
      return perm::checkNull(d, window);
    });

  m.def("parse_word", [](std::string const &text) {
    return words::toString(words::parseWord(text));
  }, "Canonical text form of a word");
  m.def("word_length", [](std::string const &text) {
    return words::length(words::parseWord(text));
  });
  m.def("nu_word", [](std::uint64_t nuN) {
    return words::toString(words::nuWords(words::Nu({nuN})).at(0));
  });

  m.def("build_scale",
        [](perm::DSeq const &d, unsigned budget, std::size_t count) {
          return scale::buildScale(d, budget, count).prefix(count);
        },
        py::arg("d"), py::arg("budget"), py::arg("count"));
  m.def("scale_violation",
        [](perm::DSeq const &d, std::vector<std::size_t> values, unsigned budget) {
          std::size_t upTo = values.empty() ? 0 : values.size() - 1;
          return scale::firstScaleViolation(d, scale::Scale::fromValues(std::move(values), budget),
                                            upTo);
        },
        py::arg("d"), py::arg("values"), py::arg("budget"),
        "Description of the first violated clause, or None");
  m.def("find_witness",
        [](std::vector<std::uint64_t> nu, std::size_t nStar, std::size_t mStar,
           std::size_t searchBound, bool cycle, unsigned budget) -> py::object {
          scale::Scale s(perm::DSeq::transpositions(), budget);
          auto wit = scale::findWitness(words::nuWords(makeNu(std::move(nu), cycle)), s, nStar,
                                        mStar, searchBound);
          return wit ? witnessDict(*wit) : py::none();
        },
        py::arg("nu"), py::arg("n_star"), py::arg("m_star"), py::arg("search_bound") = 1024,
        py::arg("cycle") = false, py::arg("budget") = 1,
        "Least obeys witness over the transposition scale, or None");

  py::class_<Solution>(m, "Solution")
    .def(py::init([](perm::DSeq d, std::vector<std::uint64_t> nu, unsigned budget,
                     std::size_t searchBound, bool cycle) {
           return std::make_unique<Solution>(std::move(d), makeNu(std::move(nu), cycle), budget,
                                             searchBound);
         }),
         py::arg("d"), py::arg("nu"), py::arg("budget") = 1, py::arg("search_bound") = 1024,
         py::arg("cycle") = false)
    .def("apply", [](Solution const &s, std::size_t n, perm::Point m) { return s.L.apply(n, m); })
    .def("inverse_apply",
         [](Solution const &s, std::size_t n, perm::Point m) { return s.L.inverseApply(n, m); })
    .def("witness",
         [](Solution const &s, std::size_t n, perm::Point m) {
           return witnessDict(s.L.witness(n, m));
         })
    .def("stabilization_bound",
         [](Solution const &s, std::size_t n, perm::Point m) {
           return solver::stabilizationBound(s.L.witness(n, m), s.L.scale());
         })
    .def("approx_row",
         [](Solution const &s, std::size_t k, std::size_t n) {
           return solver::approx(s.L.d(), s.L.words(), k).row(n);
         })
    .def("verify",
         [](Solution const &s, std::size_t nWindow, std::size_t mWindow) {
           py::list out;
           for (auto const &d : solver::verifySolution(s.L, nWindow, mWindow).discrepancies)
             out.append(py::make_tuple(d.n, d.m, d.lhs, d.rhs));
           return out;
         },
         "Discrepancies (n, m, lhs, rhs); empty when the equations hold")
    .def("closure", [](Solution const &s, std::string const &structure, std::size_t window) {
      return solver::closureCheck(s.L, structureNamed(structure), window);
    });

  py::class_<freegrp::FreeElem>(m, "FreeElem")
    .def(py::init([](std::string const &text) { return freegrp::parseFreeElem(text); }),
         py::arg("text") = "")
    .def("__mul__", [](freegrp::FreeElem const &a, freegrp::FreeElem const &b) { return a * b; })
    .def("__pow__", [](freegrp::FreeElem const &a, std::uint64_t t) {
      return freegrp::power(a, t);
    })
    .def("inverse", [](freegrp::FreeElem const &a) { return freegrp::invert(a); })
    .def("__len__", [](freegrp::FreeElem const &a) { return a.length(); })
    .def("is_identity", &freegrp::FreeElem::isIdentity)
    .def(py::self == py::self)
    .def("__hash__", [](freegrp::FreeElem const &a) {
      return py::hash(py::str(freegrp::toString(a)));
    })
    .def("__str__", [](freegrp::FreeElem const &a) { return freegrp::toString(a); })
    .def("__repr__", [](freegrp::FreeElem const &a) {
      return "FreeElem('" + freegrp::toString(a) + "')";
    })
    .def("cyclic_reduce",
         [](freegrp::FreeElem const &a) {
           auto [u, core] = freegrp::cyclicReduce(a);
           return py::make_tuple(u, core);
         })
    .def("root", [](freegrp::FreeElem const &a, std::uint64_t t) { return freegrp::hasRoot(a, t); },
         "The t-th root, or None")
    .def("no_root_exponent", [](freegrp::FreeElem const &a) { return freegrp::noRootExponent(a); })
    .def("project", [](freegrp::FreeElem const &a, std::set<freegrp::Gen> indices) {
      return freegrp::project(a, freegrp::SubBasis::finite(std::move(indices)));
    });

  m.def("enumerate_h", [](freegrp::Gen basis, std::uint64_t n) {
    return freegrp::enumerateH(freegrp::SubBasis::firstN(basis), n);
  }, py::arg("basis"), py::arg("n"));
  m.def("chain_run",
        [](freegrp::FreeElem const &a, std::vector<std::uint64_t> nu) {
          return toPython(io::toJson(freegrp::chainRun(a, freegrp::generatorParams(), nu)));
        },
        py::arg("a"), py::arg("nu"), "Chain for b_0 = a with parameters z1, z2, ...");

  m.def("run_solve", [](py::kwargs kw) { return toPython(experiment::runSolve(configFrom(kw))); });
  m.def("run_diagonalize",
        [](py::kwargs kw) { return toPython(experiment::runDiagonalize(configFrom(kw))); });
  m.def("run_verify_blocked", [](py::object nu, py::kwargs kw) {
    return toPython(experiment::runVerifyBlocked(fromPython(nu), configFrom(kw)));
  });
  m.def("run_contrast",
        [](py::kwargs kw) { return toPython(experiment::runContrast(configFrom(kw))); });
  m.def("report_failed",
        [](py::object report) { return experiment::reportFailed(fromPython(report)); });
}
