#include "wronsk/report_json.hpp"

#include <sstream>

namespace wronsk {
namespace {

Json poly_list(const std::vector<Poly> &ps, char variable = 'x')
{
	Json a = Json::array();
	for (const auto &p : ps)
		a.push_back(p.to_string(variable));
	return a;
}

Json failure_list(const std::vector<JacobiatorFailure> &fs)
{
	Json a = Json::array();
	for (const auto &f : fs)
		a.push_back({{"args", f.degrees}, {"value", f.value}});
	return a;
}

} // namespace

Json to_json(const Table6Entry &e)
{
	Json j;
	j["k"] = e.outer;
	j["l"] = e.inner;
	j["case"] = case_label(e.identity);
	j["lhs_terms"] = e.lhs_terms;
	j["rhs_terms"] = e.rhs_terms;
	j["equal"] = e.equal;
	j["equal_up_to_sign"] = e.equal_up_to_sign;
	j["sign"] = e.sign;
	j["expected_coeff"] = e.expected_coeff.get_str();
	j["measured_coeff"] = e.measured_coeff ? Json(e.measured_coeff->to_string()) : Json(nullptr);
	if (!e.equal)
		j["difference"] = e.difference.to_string();
	return j;
}

Json to_json(const Table6Report &r)
{
	Json a = Json::array();
	for (const auto &e : r.entries)
		a.push_back(to_json(e));
	return a;
}

Json to_json(const Theorem1Report &r)
{
	return {{"p", r.p},
	        {"N", r.n},
	        {"lhs", r.lhs.to_string()},
	        {"rhs", r.rhs.to_string()},
	        {"equal", r.equal},
	        {"ratio", r.ratio ? Json(r.ratio->to_string()) : Json(nullptr)}};
}

Json to_json(const GeneratingFunctionReport &r)
{
	Json entries = Json::array();
	for (const auto &e : r.entries)
		entries.push_back({{"m", e.m},
		                   {"recurrence", e.by_recurrence.to_string()},
		                   {"determinant", e.by_determinant.to_string()},
		                   {"expected", e.expected.to_string()},
		                   {"equal", e.equal}});
	return {{"M", r.max_m},
	        {"entries", entries},
	        {"partial_sum", r.partial_sum.to_string()},
	        {"exp_minus_one", r.exp_minus_one.to_string()},
	        {"functional_equation", r.functional_equation},
	        {"passed", r.passed}};
}

Json to_json(const FactorizationReport &r)
{
	return {{"N", r.n},
	        {"k", r.k},
	        {"full", r.full.to_string()},
	        {"first", r.first.to_string()},
	        {"second", r.second.to_string()},
	        {"first_is_one", r.first_is_one},
	        {"product_matches", r.product_matches},
	        {"matches_recurrence", r.matches_recurrence},
	        {"passed", r.passed}};
}

Json to_json(const JacobiatorGridReport &r)
{
	return {{"k", r.k},
	        {"l", r.l},
	        {"degree_bound", r.degree_bound},
	        {"tuples_checked", r.tuples_checked},
	        {"failures", failure_list(r.failures)},
	        {"passed", r.passed()}};
}

Json to_json(const JacobiKNReport &r)
{
	return {{"N", r.n},
	        {"tuples_checked", r.tuples_checked},
	        {"failures", failure_list(r.failures)},
	        {"passed", r.passed()}};
}

Json to_json(const Sl2Report &r)
{
	Json rels = Json::array();
	for (const auto &rel : r.relations)
		rels.push_back({{"relation", rel.name},
		                {"bracket", rel.bracket.to_string()},
		                {"expected", rel.expected.to_string()},
		                {"holds", rel.holds}});
	return {{"e", r.e.to_string()},
	        {"h", r.h.to_string()},
	        {"f", r.f.to_string()},
	        {"relations", rels},
	        {"passed", r.passed()}};
}

Json to_json(const StructureTable &t)
{
	Json entries = Json::array();
	for (const auto &e : t.entries)
		entries.push_back({{"args", e.args}, {"result", e.result}, {"coeff", e.coeff.get_str()}});
	return {{"algebra", t.algebra}, {"N", t.n}, {"entries", entries}};
}

std::string to_csv(const StructureTable &t)
{
	std::ostringstream os;
	os << "args,result,coeff\n";
	for (const auto &e : t.entries) {
		for (std::size_t i = 0; i < e.args.size(); ++i)
			os << (i ? ";" : "") << e.args[i];
		os << ',' << e.result << ',' << e.coeff.get_str() << '\n';
	}
	return os.str();
}

Json to_json(const TranslationReport &r)
{
	return {{"N", r.n},
	        {"indices", r.indices},
	        {"shift", r.shift.to_string()},
	        {"closed_unshifted", r.closed_unshifted.to_string()},
	        {"closed_shifted", r.closed_shifted.to_string()},
	        {"det_unshifted", r.det_unshifted.to_string()},
	        {"det_shifted", r.det_shifted.to_string()},
	        {"equal", r.equal}};
}

Json to_json(const ConformalReport &r)
{
	return {{"N", r.n},
	        {"weight", r.weight},
	        {"phis", poly_list(r.phis, 'y')},
	        {"change", r.change.to_string()},
	        {"lhs", r.lhs.to_string()},
	        {"rhs", r.rhs.to_string()},
	        {"equal", r.equal}};
}

} // namespace wronsk
