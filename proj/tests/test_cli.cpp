#include "metallic/cli.hpp"

#include "doctest.h"
#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int exit;
    std::string out;
    std::string err;
};

Run invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = metallic::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("seq prints exact terms") {
    CHECK(invoke({"seq", "--n", "4"}).out == "5\n");
    CHECK(invoke({"seq", "--a", "1", "--b", "1", "--n", "0"}).out == "1\n");
    CHECK(invoke({"seq", "--a", "2", "--b", "1", "--n", "2"}).out == "5\n");
    CHECK(invoke({"seq", "--n", "4"}).exit == 0);

    Run upto = invoke({"seq", "--n", "4", "--upto"});
    CHECK(upto.out == "1\n1\n2\n3\n5\n");

    Run lucas = invoke({"seq", "--a", "1", "--b", "1", "--seeds", "2,1", "--n", "4"});
    CHECK(lucas.out == "7\n");

    Run tribonacci = invoke({"seq", "--coeffs", "1,1,1", "--seeds", "1,1,1", "--n", "6"});
    CHECK(tribonacci.out == "17\n");
}

TEST_CASE("seq fast path agrees byte for byte") {
    for (std::size_t n = 0; n <= 1000; ++n) {
        Run plain = invoke({"seq", "--n", std::to_string(n)});
        Run fast = invoke({"seq", "--n", std::to_string(n), "--fast"});
        REQUIRE(plain.exit == 0);
        REQUIRE(fast.exit == 0);
        REQUIRE(plain.out == fast.out);
    }
    for (std::size_t n = 0; n <= 64; n += 4) {
        Run plain = invoke({"seq", "--a", "3/2", "--b", "5/7", "--n", std::to_string(n)});
        Run fast = invoke({"seq", "--a", "3/2", "--b", "5/7", "--n", std::to_string(n),
                           "--fast"});
        CHECK(plain.out == fast.out);
    }
}

TEST_CASE("seq usage errors") {
    Run bad = invoke({"seq", "--a", "x", "--b", "1", "--n", "3"});
    CHECK(bad.exit == 2);
    CHECK(bad.out.empty());
    CHECK(!bad.err.empty());

    CHECK(invoke({"seq", "--a", "1", "--n", "3"}).exit == 2);                      // missing --b
    CHECK(invoke({"seq", "--a", "1", "--b", "2", "--coeffs", "1,2", "--n", "3"}).exit == 2);
    CHECK(invoke({"seq", "--coeffs", "1,1,1", "--n", "3"}).exit == 2);             // k=3 needs seeds
    CHECK(invoke({"seq", "--coeffs", "1,1,1", "--seeds", "1,1", "--n", "3"}).exit == 2);
    CHECK(invoke({"seq"}).exit == 2);                                              // missing --n
}

TEST_CASE("phi command") {
    CHECK(invoke({"phi", "--a", "1", "--b", "1", "--digits", "4"}).out == "1.6180\n");
    CHECK(invoke({"phi", "--a", "1", "--b", "1", "--digits", "4", "--minus"}).out ==
          "-0.6180\n");
    CHECK(invoke({"phi", "--coeffs", "1,1,1", "--digits", "4"}).out == "1.8392\n");

    Run complexRoots = invoke({"phi", "--a", "1", "--b", "-1", "--digits", "4"});
    CHECK(complexRoots.exit == 3);
    CHECK(complexRoots.out.empty());
    CHECK(complexRoots.err == "error: complex roots out of scope\n");

    CHECK(invoke({"phi", "--coeffs", "1,1", "--minus", "--digits", "4"}).exit == 2);
    CHECK(invoke({"phi", "--coeffs", "1,-1", "--digits", "4"}).exit == 3);
    CHECK(invoke({"phi", "--digits", "4"}).exit == 2);
}

TEST_CASE("cf command") {
    CHECK(invoke({"cf", "--a", "1", "--b", "1", "--depth", "3"}).out == "5/3\n");
    CHECK(invoke({"cf", "--a", "1", "--b", "1", "--depth", "0"}).out == "1\n");
    CHECK(invoke({"cf", "--a", "2", "--b", "1", "--depth", "4"}).out == "70/29\n");

    Run zeroLevel = invoke({"cf", "--a", "1", "--b", "-1", "--depth", "2"});
    CHECK(zeroLevel.exit == 3);
    CHECK(zeroLevel.err == "error: zero denominator at continued-fraction level 1\n");
}

TEST_CASE("radical command") {
    CHECK(invoke({"radical", "--a", "1", "--b", "1", "--digits", "4"}).out == "1.6180\n");
    // Guarded converged mode rounds onto the exact fixed point.
    CHECK(invoke({"radical", "--a", "2", "--b", "3", "--digits", "6"}).out == "3.000000\n");
    // Literal truncated iterate stalls one ulp below it.
    CHECK(invoke({"radical", "--a", "2", "--b", "3", "--digits", "6", "--steps", "80"}).out ==
          "2.999999\n");
    CHECK(invoke({"radical", "--a", "0", "--b", "9", "--digits", "3"}).out == "3.000\n");

    Run stuck = invoke({"radical", "--a", "1", "--b", "0", "--digits", "6"});
    CHECK(stuck.exit == 4);
    CHECK(stuck.out.empty());

    CHECK(invoke({"radical", "--a", "-1", "--b", "1", "--digits", "4"}).exit == 3);
}

TEST_CASE("verify command and exit codes") {
    Run odd = invoke({"verify", "odd-sum", "--N", "5"});
    CHECK(odd.exit == 0);
    CHECK(odd.out == "holds: 8 = 1+2+5\n");

    Run even = invoke({"verify", "even-sum", "--N", "4"});
    CHECK(even.exit == 0);
    CHECK(even.out == "holds: 5 = 1+1+3\n");

    CHECK(invoke({"verify", "reciprocal", "--a", "1", "--b", "1", "--digits", "30"}).exit == 0);
    CHECK(invoke({"verify", "sqrt", "--a", "2", "--b", "3", "--digits", "30"}).exit == 0);
    CHECK(invoke({"verify", "cf-ratio", "--a", "3", "--b", "2", "--depth", "25"}).exit == 0);

    CHECK(invoke({"verify", "odd-sum", "--N", "4"}).exit == 3);   // parity precondition
    CHECK(invoke({"verify", "odd-sum"}).exit == 2);               // missing --N
    CHECK(invoke({"verify", "bogus", "--N", "3"}).exit == 2);
    CHECK(invoke({"verify", "reciprocal", "--a", "0", "--b", "0"}).exit == 3);
}

TEST_CASE("table command text and csv") {
    Run text = invoke({"table", "ratio", "--n-max", "5", "--digits", "4"});
    CHECK(text.exit == 0);
    CHECK(text.out.find("5  8/5    1.6000   0.0180\n") != std::string::npos);
    CHECK(text.out.find("# target: 1.6180\n") != std::string::npos);

    Run csv = invoke({"table", "ratio", "--n-max", "5", "--digits", "4", "--format", "csv"});
    CHECK(csv.out ==
          "index,value_exact,value_decimal,abs_error\n"
          "1,1,1.0000,0.6180\n"
          "2,2,2.0000,0.3820\n"
          "3,3/2,1.5000,0.1180\n"
          "4,5/3,1.6666,0.0486\n"
          "5,8/5,1.6000,0.0180\n");

    Run row10 = invoke({"table", "ratio", "--n-max", "10", "--digits", "4", "--format", "csv"});
    CHECK(row10.out.find("10,89/55,1.6181,0.0001\n") != std::string::npos);

    Run flat = invoke({"table", "ratio", "--a", "1", "--b", "0", "--n-max", "3",
                       "--digits", "4", "--format", "csv"});
    CHECK(flat.out ==
          "index,value_exact,value_decimal,abs_error\n"
          "1,1,1.0000,0.0000\n"
          "2,1,1.0000,0.0000\n"
          "3,1,1.0000,0.0000\n");

    Run cfTable = invoke({"table", "cf", "--a", "1", "--b", "1", "--max-depth", "4",
                          "--digits", "4", "--format", "csv"});
    CHECK(cfTable.out ==
          "index,value_exact,value_decimal,abs_error\n"
          "0,1,1.0000,0.6180\n"
          "1,2,2.0000,0.3820\n"
          "2,3/2,1.5000,0.1180\n"
          "3,5/3,1.6666,0.0486\n"
          "4,8/5,1.6000,0.0180\n");

    // Undefined rows keep their index and leave the value columns empty.
    Run holes = invoke({"table", "ratio", "--a", "0", "--b", "1", "--seeds", "1,0",
                        "--n-max", "4", "--digits", "4", "--format", "csv"});
    CHECK(holes.out ==
          "index,value_exact,value_decimal,abs_error\n"
          "1,0,0.0000,1.0000\n"
          "2,,,\n"
          "3,0,0.0000,1.0000\n"
          "4,,,\n");

    CHECK(invoke({"table", "spiral", "--n-max", "3"}).exit == 2);
    CHECK(invoke({"table", "ratio"}).exit == 2);
    CHECK(invoke({"table", "cf", "--seeds", "1,2", "--max-depth", "3"}).exit == 2);
    CHECK(invoke({"seq", "--n", "3", "--format", "csv"}).exit == 2);
}

TEST_CASE("json envelopes round-trip their parameters") {
    Run phi = invoke({"phi", "--a", "1", "--b", "1", "--digits", "4", "--format", "json"});
    CHECK(phi.exit == 0);
    nlohmann::json envelope = nlohmann::json::parse(phi.out);
    CHECK(envelope["format_version"] == 1);
    CHECK(envelope["command"] == "phi");
    CHECK(envelope["params"]["a"] == "1");
    CHECK(envelope["params"]["b"] == "1");
    CHECK(envelope["params"]["digits"] == 4);
    CHECK(envelope["params"]["minus"] == false);
    CHECK(envelope["result"]["value"] == "1.6180");

    Run table = invoke({"table", "ratio", "--n-max", "5", "--digits", "4",
                        "--format", "json"});
    nlohmann::json tableEnvelope = nlohmann::json::parse(table.out);
    CHECK(tableEnvelope["command"] == "table");
    CHECK(tableEnvelope["params"]["kind"] == "ratio");
    CHECK(tableEnvelope["params"]["n_max"] == 5);
    CHECK(tableEnvelope["result"]["target"] == "1.6180");
    CHECK(tableEnvelope["result"]["rows"].size() == 5);
    CHECK(tableEnvelope["result"]["rows"][4]["value_exact"] == "8/5");
    CHECK(tableEnvelope["result"]["rows"][4]["value_decimal"] == "1.6000");

    Run verify = invoke({"verify", "odd-sum", "--N", "5", "--format", "json"});
    nlohmann::json verifyEnvelope = nlohmann::json::parse(verify.out);
    CHECK(verifyEnvelope["result"]["holds"] == true);
    CHECK(verifyEnvelope["result"]["lhs"] == "8");
    CHECK(verifyEnvelope["result"]["addends"] ==
          nlohmann::json::array({"1", "2", "5"}));

    // Error envelopes go to the diagnostic stream; payload stays empty.
    Run broken = invoke({"phi", "--a", "1", "--b", "-1", "--digits", "4",
                         "--format", "json"});
    CHECK(broken.exit == 3);
    CHECK(broken.out.empty());
    nlohmann::json errorEnvelope = nlohmann::json::parse(broken.err);
    CHECK(errorEnvelope["error"]["exit"] == 3);
    CHECK(errorEnvelope["error"]["kind"] == "domain");
    CHECK(errorEnvelope["error"]["message"] == "complex roots out of scope");
}

TEST_CASE("identical invocations produce identical bytes") {
    const std::vector<std::string> cases[] = {
        {"table", "ratio", "--n-max", "10", "--digits", "4"},
        {"table", "cf", "--a", "3", "--b", "2", "--max-depth", "8", "--digits", "6",
         "--format", "json"},
        {"radical", "--a", "1", "--b", "1", "--digits", "12"},
        {"seq", "--coeffs", "2/3,1,5", "--seeds", "1,2,3", "--n", "40", "--fast"},
    };
    for (const auto& args : cases) {
        Run first = invoke(args);
        Run second = invoke(args);
        CHECK(first.exit == second.exit);
        CHECK(first.out == second.out);
        CHECK(first.err == second.err);
    }
}

TEST_CASE("help is available and exits cleanly") {
    Run help = invoke({"--help"});
    CHECK(help.exit == 0);
    CHECK(help.out.find("Subcommands:") != std::string::npos);
    Run seqHelp = invoke({"seq", "--help"});
    CHECK(seqHelp.exit == 0);
    CHECK(seqHelp.out.find("--fast") != std::string::npos);
    CHECK(invoke({}).exit == 2);
    CHECK(invoke({"unknown-command"}).exit == 2);
}
