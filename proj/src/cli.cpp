#include "wronsk/cli.hpp"

#include "wronsk/errors.hpp"
#include "wronsk/report_json.hpp"
#include "wronsk/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace wronsk::cli {
namespace {

struct Piece {
	std::string text;
	std::size_t offset;
};

// Splits at commas outside parentheses; offsets are into `joined`.
std::vector<Piece> split_top_level(const std::string &joined)
{
	std::vector<Piece> out;
	int depth = 0;
	std::size_t start = 0;
	for (std::size_t i = 0; i <= joined.size(); ++i) {
		char c = i < joined.size() ? joined[i] : ',';
		if (c == '(')
			++depth;
		else if (c == ')')
			--depth;
		else if (c == ',' && depth == 0) {
			out.push_back({joined.substr(start, i - start), start});
			start = i + 1;
		}
	}
	return out;
}

Poly cofactor_determinant(const Matrix<Poly> &m)
{
	Poly acc;
	for_each_leibniz_term(m, Poly(1), [&](int sign, const Poly &t) {
		if (sign > 0)
			acc += t;
		else
			acc -= t;
	});
	return acc;
}

int emit(const std::string &text, const std::string &out_file, std::ostream &out, std::ostream &err)
{
	if (out_file.empty()) {
		out << text;
		return kVerified;
	}
	std::ofstream f(out_file, std::ios::binary);
	if (!f) {
		err << "cannot open " << out_file << " for writing\n";
		return kUsage;
	}
	f << text;
	return kVerified;
}

struct Options {
	std::string format;
	std::string out_file;
	std::uint64_t seed = 1;
	std::size_t max_arity = 8;
	std::size_t max_tuples = 100'000;

	std::vector<std::string> polys;

	std::string algebra = "kN";
	std::size_t n = 2;
	std::string range = "-5:5";

	std::string suite;
	SuiteParams params;
};

int cmd_wronskian(const Options &o, std::ostream &out, std::ostream &err)
{
	std::string joined;
	for (std::size_t i = 0; i < o.polys.size(); ++i)
		joined += (i ? "," : "") + o.polys[i];
	std::vector<Poly> fs;
	for (const Piece &p : split_top_level(joined)) {
		try {
			fs.push_back(Poly::parse(p.text));
		} catch (const ParseError &e) {
			err << "parse error at position " << p.offset + e.position() << ": " << e.message() << '\n';
			return kUsage;
		}
	}
	if (fs.empty()) {
		err << "wronskian needs at least one polynomial\n";
		return kUsage;
	}
	if (fs.size() > o.max_arity) {
		err << "arity " << fs.size() << " exceeds --max-arity " << o.max_arity << '\n';
		return kResourceCap;
	}
	Poly w = wronskian(fs);
	bool verified = w == cofactor_determinant(wronskian_matrix(fs, WronskianSpec::contiguous(fs.size())));
	std::string format = o.format.empty() ? "text" : o.format;
	if (format == "json") {
		Json inputs = Json::array();
		for (const auto &f : fs)
			inputs.push_back(f.to_string());
		Json j{{"operation", "wronskian"}, {"inputs", inputs}, {"output", w.to_string()}, {"verified", verified}};
		return emit(j.dump(2) + "\n", o.out_file, out, err);
	}
	if (format != "text") {
		err << "wronskian supports --format text|json\n";
		return kUsage;
	}
	int rc = emit(w.to_string() + "\n", o.out_file, out, err);
	return rc != kVerified ? rc : (verified ? kVerified : kCounterexample);
}

int cmd_tables(const Options &o, std::ostream &out, std::ostream &err)
{
	StructureTable t;
	if (o.algebra == "kN") {
		if (o.n + 1 > o.max_tuples) {
			err << "table size exceeds --max-tuples\n";
			return kResourceCap;
		}
		if (o.n == 0) {
			err << "N must be positive\n";
			return kUsage;
		}
		t = structure_constants_kN(o.n);
	} else if (o.algebra == "witt") {
		long lo = 0, hi = 0;
		char colon = 0;
		std::istringstream is(o.range);
		if (!(is >> lo >> colon >> hi) || colon != ':' || !is.eof() || hi < lo) {
			err << "--range must look like LO:HI with LO <= HI\n";
			return kUsage;
		}
		if (o.n == 0) {
			err << "N must be positive\n";
			return kUsage;
		}
		t = witt_table(o.n, lo, hi, o.max_tuples);
	} else {
		err << "--algebra must be kN or witt\n";
		return kUsage;
	}
	std::string format = o.format.empty() ? "json" : o.format;
	if (format == "json")
		return emit(to_json(t).dump(2) + "\n", o.out_file, out, err);
	if (format == "csv")
		return emit(to_csv(t), o.out_file, out, err);
	if (format == "text") {
		std::ostringstream os;
		std::string name = t.algebra == "kN" ? "e" : "a";
		for (const auto &e : t.entries) {
			os << '[';
			for (std::size_t i = 0; i < e.args.size(); ++i)
				os << (i ? ", " : "") << name << e.args[i];
			os << "] = " << e.coeff.get_str() << " * " << name << e.result << '\n';
		}
		return emit(os.str(), o.out_file, out, err);
	}
	err << "tables supports --format json|csv|text\n";
	return kUsage;
}

int cmd_verify(const Options &o, std::ostream &out, std::ostream &err)
{
	SuiteParams params = o.params;
	params.seed = o.seed;
	params.max_arity = o.max_arity;
	SuiteResult r = run_suite(o.suite, params);
	std::string format = o.format.empty() ? "json" : o.format;
	int rc;
	if (format == "json") {
		rc = emit(r.report.dump(2) + "\n", o.out_file, out, err);
	} else if (format == "text") {
		std::ostringstream os;
		auto line = [&](const Json &rep) {
			os << rep["suite"].get<std::string>() << ": " << (rep["passed"].get<bool>() ? "PASS" : "FAIL") << " ("
			   << rep["checks"].get<std::size_t>() << " checks)\n";
		};
		if (r.report.contains("suites"))
			for (const auto &s : r.report["suites"])
				line(s);
		line(r.report);
		rc = emit(os.str(), o.out_file, out, err);
	} else {
		err << "verify supports --format json|text\n";
		return kUsage;
	}
	if (rc != kVerified)
		return rc;
	if (!r.passed)
		err << "counterexample found in suite " << r.suite << '\n';
	return r.passed ? kVerified : kCounterexample;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Wronskian N-ary brackets: structure constants and identity checks", "wronsk"};
	app.require_subcommand(1);
	Options o;

	auto common = [&](CLI::App *sub) {
		sub->add_option("--format", o.format, "Output format: json, csv or text");
		sub->add_option("--out", o.out_file, "Write output to FILE instead of stdout");
		sub->add_option("--seed", o.seed, "Seed for randomized sweeps");
		sub->add_option("--max-arity", o.max_arity, "Cap on bracket arity (factorial enumerations)");
	};

	auto *w = app.add_subcommand("wronskian", "Wronskian W^{0..N-1} of the given polynomials");
	common(w);
	w->add_option("polys", o.polys, "Polynomials, comma separated (\"1, x, x^2/2\")")->required();

	auto *t = app.add_subcommand("tables", "Structure-constant table for k_N[x] or the Witt deformation");
	common(t);
	t->add_option("--algebra", o.algebra, "kN or witt")->check(CLI::IsMember({"kN", "witt"}));
	t->add_option("-N", o.n, "Arity N")->required();
	t->add_option("--range", o.range, "Witt index range LO:HI");
	t->add_option("--max-tuples", o.max_tuples, "Cap on the number of table entries");

	auto *v = app.add_subcommand("verify", "Run an identity-verification suite");
	common(v);
	std::vector<std::string> choices = suite_names();
	choices.push_back("all");
	v->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(choices));
	v->add_option("-k", o.params.k, "Outer bracket parameter");
	v->add_option("-l", o.params.l, "Inner bracket parameter");
	v->add_option("-N", o.params.n, "Size parameter (N, or M for eq12)");
	v->add_option("--degree-bound", o.params.degree_bound, "Degree bound D of exhaustive grids");
	v->add_option("--count", o.params.count, "Number of randomized samples");

	std::vector<std::string> rev(args.rbegin(), args.rend());
	if (!rev.empty())
		rev.pop_back();
	try {
		app.parse(rev);
	} catch (const CLI::CallForHelp &) {
		out << app.help();
		return kVerified;
	} catch (const CLI::ParseError &e) {
		err << e.what() << '\n';
		return kUsage;
	}

	try {
		if (*w)
			return cmd_wronskian(o, out, err);
		if (*t)
			return cmd_tables(o, out, err);
		return cmd_verify(o, out, err);
	} catch (const ResourceLimitError &e) {
		err << "resource cap: " << e.what() << '\n';
		return kResourceCap;
	} catch (const ParseError &e) {
		err << e.what() << '\n';
		return kUsage;
	} catch (const std::invalid_argument &e) {
		err << e.what() << '\n';
		return kUsage;
	}
}

} // namespace wronsk::cli
