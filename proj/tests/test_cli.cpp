#include "wronsk/cli.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using wronsk::cli::run;

namespace {

struct Outcome {
	int code;
	std::string out;
	std::string err;
};

Outcome cli(std::vector<std::string> args)
{
	args.insert(args.begin(), "wronsk");
	std::ostringstream out, err;
	int code = run(args, out, err);
	return {code, out.str(), err.str()};
}

} // namespace

TEST(CliWronskian, Examples)
{
	EXPECT_EQ(cli({"wronskian", "1, x, x^2/2"}).out, "1\n");
	EXPECT_EQ(cli({"wronskian", "x, x^2/2, x^3/6"}).out, "x^3/6\n");
	EXPECT_EQ(cli({"wronskian", "x^2", "x^5"}).out, "3*x^6\n");
	EXPECT_EQ(cli({"wronskian", "(x + 1)^2, x"}).out, "-x^2 + 1\n");
}

TEST(CliWronskian, Json)
{
	Outcome o = cli({"wronskian", "x^2, x^5", "--format", "json"});
	ASSERT_EQ(o.code, 0);
	auto j = nlohmann::json::parse(o.out);
	EXPECT_EQ(j["operation"], "wronskian");
	EXPECT_EQ(j["inputs"], nlohmann::json({"x^2", "x^5"}));
	EXPECT_EQ(j["output"], "3*x^6");
	EXPECT_EQ(j["verified"], true);
}

TEST(CliWronskian, Errors)
{
	Outcome bad = cli({"wronskian", "x, x^"});
	EXPECT_EQ(bad.code, 2);
	EXPECT_NE(bad.err.find("parse error at position 5"), std::string::npos) << bad.err;
	EXPECT_EQ(cli({"wronskian", ""}).code, 2);
	EXPECT_EQ(cli({"wronskian", "x, x^2, x^3", "--max-arity", "2"}).code, 3);
	EXPECT_EQ(cli({"wronskian", "x", "--format", "csv"}).code, 2);
}

TEST(CliTables, KNBottomCase)
{
	Outcome o = cli({"tables", "--algebra", "kN", "-N", "2"});
	ASSERT_EQ(o.code, 0) << o.err;
	auto j = nlohmann::json::parse(o.out);
	EXPECT_EQ(j["algebra"], "kN");
	EXPECT_EQ(j["N"], 2);
	ASSERT_EQ(j["entries"].size(), 3u);
	EXPECT_EQ(j["entries"][2]["args"], nlohmann::json({1, 2}));
	EXPECT_EQ(j["entries"][2]["result"], 2);
	EXPECT_EQ(j["entries"][2]["coeff"], "1");

	Outcome one = cli({"tables", "--algebra", "kN", "-N", "1", "--format", "csv"});
	// the unary bracket is the identity: one entry per basis element
	EXPECT_EQ(one.out, "args,result,coeff\n0,0,1\n1,1,1\n");
}

TEST(CliTables, Witt)
{
	Outcome o = cli({"tables", "--algebra", "witt", "-N", "2", "--range", "-2:2", "--format", "csv"});
	ASSERT_EQ(o.code, 0) << o.err;
	std::istringstream in(o.out);
	std::string line;
	std::getline(in, line);
	EXPECT_EQ(line, "args,result,coeff");
	int rows = 0;
	while (std::getline(in, line)) {
		long i, j, r, c;
		ASSERT_EQ(std::sscanf(line.c_str(), "%ld;%ld,%ld,%ld", &i, &j, &r, &c), 4) << line;
		EXPECT_EQ(c, j - i);
		EXPECT_EQ(r, i + j);
		++rows;
	}
	EXPECT_EQ(rows, 10);
}

TEST(CliTables, Errors)
{
	EXPECT_EQ(cli({"tables", "--algebra", "witt", "-N", "4", "--range", "-50:50"}).code, 3);
	EXPECT_EQ(cli({"tables", "--algebra", "witt", "-N", "2", "--range", "3:1"}).code, 2);
	EXPECT_EQ(cli({"tables", "--algebra", "so3", "-N", "2"}).code, 2);
	EXPECT_EQ(cli({"tables", "--algebra", "kN", "-N", "0"}).code, 2);
}

TEST(CliVerify, Sl2)
{
	Outcome o = cli({"verify", "sl2"});
	ASSERT_EQ(o.code, 0);
	auto j = nlohmann::json::parse(o.out);
	EXPECT_EQ(j["passed"], true);
	Outcome t = cli({"verify", "sl2", "--format", "text"});
	EXPECT_EQ(t.out, "sl2: PASS (3 checks)\n");
}

TEST(CliVerify, Eq7SingleGrid)
{
	Outcome o = cli({"verify", "eq7", "-k", "2", "-l", "2", "--degree-bound", "6", "--format", "text"});
	EXPECT_EQ(o.code, 0) << o.err;
	EXPECT_EQ(o.out, "eq7: PASS (462 checks)\n");
}

TEST(CliVerify, Errors)
{
	EXPECT_EQ(cli({"verify", "eq99"}).code, 2);
	EXPECT_EQ(cli({"verify", "eq6", "-k", "7", "-l", "4"}).code, 3);
	EXPECT_EQ(cli({"verify", "jacobi-kN", "-N", "6"}).code, 3);
	EXPECT_EQ(cli({}).code, 2);
	EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(CliVerify, CounterexampleExitCode)
{
	Outcome o = cli({"verify", "eq4", "--count", "5"});
	EXPECT_EQ(o.code, 1);
	EXPECT_NE(o.err.find("counterexample"), std::string::npos);
	auto j = nlohmann::json::parse(o.out);
	EXPECT_EQ(j["passed"], false);
}

TEST(CliDeterminism, SameSeedSameBytes)
{
	for (const char *suite : {"eq15", "witt", "eq4"}) {
		Outcome a = cli({"verify", suite, "--seed", "77", "--count", "10"});
		Outcome b = cli({"verify", suite, "--seed", "77", "--count", "10"});
		EXPECT_EQ(a.out, b.out) << suite;
		EXPECT_EQ(a.code, b.code);
	}
}

TEST(CliOutput, WritesFile)
{
	std::string path = ::testing::TempDir() + "wronsk_table.csv";
	Outcome o = cli({"tables", "--algebra", "kN", "-N", "3", "--format", "csv", "--out", path});
	ASSERT_EQ(o.code, 0) << o.err;
	EXPECT_TRUE(o.out.empty());
	std::ifstream in(path);
	std::stringstream buf;
	buf << in.rdbuf();
	EXPECT_EQ(buf.str(), "args,result,coeff\n0;1;2,0,1\n0;1;3,1,1\n0;2;3,2,1\n1;2;3,3,1\n");
	std::remove(path.c_str());
}
