#include "wronsk/suites.hpp"

#include "wronsk/errors.hpp"
#include "wronsk/sampler.hpp"

#include <stdexcept>

namespace wronsk {
namespace {

struct Tally {
	std::size_t checks = 0;
	Json failures = Json::array();

	void check(bool ok, const Json &what)
	{
		++checks;
		if (!ok)
			failures.push_back(what);
	}
	SuiteResult finish(std::string suite, Json details)
	{
		SuiteResult r;
		r.suite = std::move(suite);
		r.passed = failures.empty();
		r.checks = checks;
		r.report = Json{{"suite", r.suite}, {"passed", r.passed}, {"checks", checks}, {"failures", failures}};
		for (auto &[key, value] : details.items())
			r.report[key] = value;
		return r;
	}
};

Poly xpow(std::size_t d) { return Poly::monomial(Rational(1), d); }

// odometer over {0..top}^len
template <class Visit>
void for_each_tuple(std::size_t len, std::size_t top, Visit visit)
{
	std::vector<std::size_t> t(len, 0);
	for (;;) {
		visit(t);
		std::size_t i = len;
		while (i > 0 && t[i - 1] == top) {
			t[i - 1] = 0;
			--i;
		}
		if (i == 0)
			return;
		++t[i - 1];
	}
}

SuiteResult suite_sl2(const SuiteParams &)
{
	Tally t;
	Sl2Report r = verify_sl2();
	for (const auto &rel : r.relations)
		t.check(rel.holds, Json{{"relation", rel.name}, {"bracket", rel.bracket.to_string()}});
	return t.finish("sl2", Json{{"detail", to_json(r)}});
}

SuiteResult suite_eq4(const SuiteParams &p)
{
	Tally t;
	const std::size_t d1 = p.degree_bound.value_or(6);
	const std::size_t random_count = p.count.value_or(200);
	auto check = [&](std::size_t order, const std::vector<Poly> &ws) {
		Theorem1Report r = verify_theorem1(order, ws, p.max_arity);
		bool closed = r.lhs.is_zero() || r.lhs.pure_order() == order;
		t.check(r.equal && closed, to_json(r));
	};
	for (std::size_t a = 0; a <= d1; ++a)
		for (std::size_t b = 0; b <= d1; ++b)
			check(1, {xpow(a), xpow(b)});
	for_each_tuple(4, 3, [&](const std::vector<std::size_t> &d) {
		check(2, {xpow(d[0]), xpow(d[1]), xpow(d[2]), xpow(d[3])});
	});
	Sampler s(p.seed);
	for (std::size_t i = 0; i < random_count; ++i) {
		std::vector<Poly> ws;
		for (int j = 0; j < 4; ++j)
			ws.push_back(s.nonzero_poly(4));
		check(2, ws);
	}
	std::vector<Poly> cubic{xpow(0), xpow(1), xpow(2), xpow(3)};
	Theorem1Report special = verify_theorem1(2, cubic, p.max_arity);
	t.check(special.lhs == DiffOp(Poly(12), 2) && special.equal, to_json(special));
	return t.finish("eq4", Json{{"instance_1_x_x2_x3", to_json(special)}});
}

SuiteResult suite_eq6(const SuiteParams &p)
{
	Tally t;
	Table6Report r = verify_table6(static_cast<unsigned>(p.k.value_or(5)), static_cast<unsigned>(p.l.value_or(4)),
	                               static_cast<unsigned>(p.max_arity));
	for (const auto &e : r.entries) {
		std::size_t n = e.outer + e.inner - 1;
		std::size_t predicted = e.expected_coeff == 0 ? 0 : factorial(static_cast<unsigned>(n)).get_ui();
		t.check(e.equal_up_to_sign && e.lhs_terms == predicted && e.rhs_terms == predicted, to_json(e));
	}
	return t.finish("eq6", Json{{"cases", to_json(r)}});
}

SuiteResult suite_eq7(const SuiteParams &p)
{
	Tally t;
	Json grids = Json::array();
	std::vector<std::size_t> ks, ls;
	for (std::size_t i = 1; i <= 3; ++i) {
		ks.push_back(i);
		ls.push_back(i);
	}
	if (p.k)
		ks = {*p.k};
	if (p.l)
		ls = {*p.l};
	for (std::size_t k : ks) {
		for (std::size_t l : ls) {
			JacobiatorGridReport r = verify_jacobiator_grid(k, l, p.degree_bound.value_or(k + l + 2));
			t.checks += r.tuples_checked;
			for (const auto &f : r.failures)
				t.failures.push_back(Json{{"k", k}, {"l", l}, {"degrees", f.degrees}, {"value", f.value}});
			Json g = to_json(r);
			g.erase("failures");
			grids.push_back(g);
		}
	}
	return t.finish("eq7", Json{{"grids", grids}});
}

SuiteResult suite_eq9(const SuiteParams &p)
{
	Tally t;
	const std::size_t n_max = p.n.value_or(8);
	Json tables = Json::array();
	for (std::size_t n = 1; n <= n_max; ++n) {
		for (std::size_t k = 0; k <= n; ++k) {
			try {
				Poly w = basis_wronskian(n, k);
				t.check(true, {});
			} catch (const InternalInconsistencyError &e) {
				t.check(false, Json{{"N", n}, {"k", k}, {"error", e.what()}});
			}
			FactorizationReport f = verify_factorization_eq10(n, k);
			t.check(f.passed, to_json(f));
		}
		StructureTable table = structure_constants_kN(n);
		bool ok = table.entries.size() == n + 1;
		for (const auto &e : table.entries) {
			ok = ok && (e.coeff == 1 || e.coeff == -1);
			// args omit exactly one index k; result is N - k
			std::size_t omitted = 0;
			while (omitted < e.args.size() && e.args[omitted] == static_cast<long>(omitted))
				++omitted;
			ok = ok && e.result == static_cast<long>(n - omitted);
		}
		t.check(ok, to_json(table));
		if (n <= 3)
			tables.push_back(to_json(table));
	}
	return t.finish("eq9", Json{{"tables", tables}});
}

SuiteResult suite_eq12(const SuiteParams &p)
{
	Tally t;
	GeneratingFunctionReport r = verify_generating_function(p.n.value_or(12));
	for (const auto &e : r.entries)
		t.check(e.equal, Json{{"m", e.m}, {"recurrence", e.by_recurrence.to_string()},
		                      {"determinant", e.by_determinant.to_string()}});
	t.check(r.functional_equation, Json{{"functional_equation", false}});
	t.check(r.partial_sum == r.exp_minus_one, Json{{"partial_sum", r.partial_sum.to_string()}});
	return t.finish("eq12", Json{{"detail", to_json(r)}});
}

SuiteResult suite_eq15(const SuiteParams &p)
{
	Tally t;
	const std::size_t bound = p.degree_bound.value_or(8);
	const std::size_t random_count = p.count.value_or(100);
	auto compare = [&](const std::vector<Rational> &nus) {
		std::vector<Monomial> ms;
		for (const auto &nu : nus)
			ms.push_back(Monomial::power(nu));
		Monomial closed = vandermonde_closed_form(nus);
		Monomial direct = wronskian_monomials_det(ms);
		Json what{{"exponents", Json::array()}, {"closed", closed.to_string()}, {"direct", direct.to_string()}};
		for (const auto &nu : nus)
			what["exponents"].push_back(nu.to_string());
		t.check(closed == direct, what);
	};
	for (std::size_t n = 1; n <= 4; ++n) {
		for_each_tuple(n, bound, [&](const std::vector<std::size_t> &d) {
			std::vector<Rational> nus;
			for (auto v : d)
				nus.emplace_back(static_cast<long>(v));
			compare(nus);
		});
	}
	Sampler s(p.seed);
	for (std::size_t n = 2; n <= 5; ++n) {
		for (std::size_t i = 0; i < random_count; ++i) {
			std::vector<Rational> nus;
			for (std::size_t j = 0; j < n; ++j)
				nus.push_back(s.rational(12, 4));
			compare(nus);
		}
	}
	return t.finish("eq15", Json::object());
}

SuiteResult suite_jacobi_kn(const SuiteParams &p)
{
	Tally t;
	std::vector<std::size_t> ns{2, 4};
	if (p.n)
		ns = {*p.n};
	Json runs = Json::array();
	for (std::size_t n : ns) {
		JacobiKNReport r = verify_jacobi_kN(n);
		t.checks += r.tuples_checked;
		for (const auto &f : r.failures)
			t.failures.push_back(Json{{"N", n}, {"basis", f.degrees}, {"value", f.value}});
		Json j = to_json(r);
		j.erase("failures");
		runs.push_back(j);
	}
	return t.finish("jacobi-kN", Json{{"runs", runs}});
}

SuiteResult suite_witt(const SuiteParams &p)
{
	Tally t;
	const long lo = -5, hi = 5;
	for (long i = lo; i <= hi; ++i) {
		for (long j = lo; j <= hi; ++j) {
			std::vector<long> idx{i, j};
			WittBracket b = witt_bracket(2, idx);
			t.check(b.coeff == j - i && b.result_index == i + j,
			        Json{{"i", i}, {"j", j}, {"coeff", b.coeff.get_str()}, {"result", b.result_index}});
		}
	}
	const std::size_t random_count = p.count.value_or(100);
	Sampler s(p.seed);
	for (std::size_t n = 2; n <= 5; ++n) {
		for (std::size_t r = 0; r < random_count; ++r) {
			std::vector<long> idx;
			for (std::size_t q = 0; q < n; ++q)
				idx.push_back(s.uniform(-6, 6));
			WittBracket b = witt_bracket(n, idx);

			// direct determinant of the shifted generators
			std::vector<Monomial> gens;
			for (long i : idx)
				gens.push_back(WittGenerator{i, n}.monomial());
			Monomial direct = wronskian_monomials_det(gens);
			bool law = direct.is_zero() ? b.coeff == 0
			                            : direct.coeff() == Rational(b.coeff) &&
			                                  direct.exponent() - Rational(static_cast<long>(n), 2) ==
			                                      Rational(b.result_index);
			t.check(law, Json{{"N", n}, {"indices", idx}, {"coeff", b.coeff.get_str()},
			                  {"direct", direct.to_string()}});

			std::size_t a = static_cast<std::size_t>(s.uniform(0, static_cast<long>(n) - 1));
			std::size_t c = static_cast<std::size_t>(s.uniform(0, static_cast<long>(n) - 1));
			if (a != c) {
				std::vector<long> swapped = idx;
				std::swap(swapped[a], swapped[c]);
				t.check(witt_bracket(n, swapped).coeff == -b.coeff, Json{{"antisymmetry", idx}});
			}

			TranslationReport half = verify_translation_invariance(n, idx, Rational(static_cast<long>(n), 2));
			t.check(half.equal, to_json(half));
			TranslationReport any = verify_translation_invariance(n, idx, s.rational(10, 6));
			t.check(any.equal, to_json(any));
		}
	}
	// Jacobiator on shifted generators
	for (std::size_t n = 2; n <= 4; ++n) {
		for (std::size_t k = 1; k <= 2; ++k) {
			for (std::size_t l = 1; l <= 2; ++l) {
				for (std::size_t r = 0; r < 5; ++r) {
					std::vector<Monomial> gens;
					std::vector<long> idx;
					for (std::size_t q = 0; q < k + l + 1; ++q) {
						idx.push_back(s.uniform(-5, 5));
						gens.push_back(WittGenerator{idx.back(), n}.monomial());
					}
					Monomial j = jacobiator_monomials(k, l, gens);
					t.check(j.is_zero(), Json{{"N", n}, {"k", k}, {"l", l}, {"indices", idx},
					                          {"jacobiator", j.to_string()}});
				}
			}
		}
	}
	return t.finish("witt", Json::object());
}

SuiteResult suite_conformal(const SuiteParams &)
{
	Tally t;
	const std::vector<Poly> changes{Poly::parse("x + x^2"), Poly::parse("x^2"), Poly::parse("2*x + 1"),
	                                Poly::parse("x^3 + x")};
	for (std::size_t n = 2; n <= 4; ++n) {
		for (const Poly &y : changes) {
			CoordinateChange change(y);
			for_each_tuple(n, 4, [&](const std::vector<std::size_t> &a) {
				std::vector<Poly> phis;
				for (auto e : a)
					phis.push_back(xpow(e));
				ConformalReport r = verify_conformal_law(phis, change);
				t.check(r.equal, to_json(r));
			});
		}
		// the weight is the only exponent that works on a generic instance
		std::vector<Poly> phis;
		for (std::size_t e = 1; e <= n; ++e)
			phis.push_back(xpow(e));
		CoordinateChange generic(Poly::parse("x + x^2"));
		std::size_t weight = conformal_weight(n);
		for (std::size_t w = 0; w <= weight + 2; ++w) {
			bool holds = conformal_law_with_weight(phis, generic, w).equal;
			t.check(holds == (w == weight), Json{{"N", n}, {"weight_tried", w}, {"holds", holds}});
		}
	}
	return t.finish("conformal", Json::object());
}

using Runner = SuiteResult (*)(const SuiteParams &);

const std::vector<std::pair<std::string, Runner>> &registry()
{
	static const std::vector<std::pair<std::string, Runner>> r{
	    {"sl2", suite_sl2},         {"eq4", suite_eq4},   {"eq6", suite_eq6},
	    {"eq7", suite_eq7},         {"eq9", suite_eq9},   {"eq12", suite_eq12},
	    {"eq15", suite_eq15},       {"jacobi-kN", suite_jacobi_kn}, {"witt", suite_witt},
	    {"conformal", suite_conformal},
	};
	return r;
}

} // namespace

const std::vector<std::string> &suite_names()
{
	static const std::vector<std::string> names = [] {
		std::vector<std::string> v;
		for (const auto &[name, run] : registry())
			v.push_back(name);
		return v;
	}();
	return names;
}

SuiteResult run_suite(std::string_view name, const SuiteParams &params)
{
	if (name == "all") {
		SuiteResult all;
		all.suite = "all";
		all.passed = true;
		Json suites = Json::array();
		for (const auto &[n, run] : registry()) {
			SuiteResult r = run(params);
			all.passed = all.passed && r.passed;
			all.checks += r.checks;
			suites.push_back(r.report);
		}
		all.report = Json{{"suite", "all"}, {"passed", all.passed}, {"checks", all.checks}, {"suites", suites}};
		return all;
	}
	for (const auto &[n, run] : registry())
		if (n == name)
			return run(params);
	throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

} // namespace wronsk
