#include <catch2/catch_amalgamated.hpp>

#include <syzygy/checks.hpp>
#include <syzygy/input.hpp>
#include <syzygy/report.hpp>

#include <stdexcept>

using namespace syz;

namespace {

VerificationReport sample_report() {
  VerificationReport rep;
  CheckRecord a;
  a.id = "alpha";
  a.status = CheckStatus::pass;
  a.claim("order", "4");
  a.derive("scalar", "-2");
  a.note("first note");
  a.millis = 1234;
  CheckRecord b;
  b.id = "beta";
  b.status = CheckStatus::fail;
  b.error = "something broke";
  b.millis = 7;
  CheckRecord c;
  c.id = "gamma";
  c.status = CheckStatus::skipped;
  c.note("expensive");
  rep.records = {a, b, c};
  return rep;
}

}  // namespace

TEST_CASE("status names round-trip", "[report]") {
  for (CheckStatus s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::skipped})
    REQUIRE(status_from_name(status_name(s)) == s);
  REQUIRE_THROWS_AS(status_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("machine format round-trips a report exactly", "[report]") {
  VerificationReport rep = sample_report();
  VerificationReport back = parse_report(machine_format(rep));
  REQUIRE(back == rep);
  REQUIRE(back.records[0].millis == 1234);  // timings survive the machine format
  REQUIRE(back.records[1].error == "something broke");
  REQUIRE(back.records[0].find("scalar") != nullptr);
  REQUIRE(back.records[0].find("scalar")->source == "derived");
  REQUIRE(back.records[0].find("order")->source == "claimed");
  REQUIRE(back.records[0].find("missing") == nullptr);
}

TEST_CASE("canonical body ignores timings", "[report]") {
  VerificationReport rep = sample_report();
  VerificationReport other = sample_report();
  other.records[0].millis = 999999;
  other.records[1].millis = -1;
  REQUIRE(canonical_body(rep) == canonical_body(other));
  REQUIRE(machine_format(rep) != machine_format(other));
  REQUIRE(rep == other);  // equality ignores timings too

  other.records[0].values[1].value = "-3";
  REQUIRE(canonical_body(rep) != canonical_body(other));
  REQUIRE(!(rep == other));
}

TEST_CASE("parse_report rejects foreign documents", "[report]") {
  REQUIRE_THROWS_AS(parse_report("{}"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_report("not json"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_report("{\"format\":\"syzygy-report/999\",\"records\":[]}"),
                    std::invalid_argument);
}

TEST_CASE("exit code reflects failures but not skips", "[report]") {
  VerificationReport rep = sample_report();
  REQUIRE(rep.exit_code() == 1);
  rep.records[1].status = CheckStatus::pass;
  REQUIRE(rep.exit_code() == 0);  // gamma stays skipped
  REQUIRE((!rep.all_passed() || rep.exit_code() == 0));
}

TEST_CASE("human format lists every record and a summary", "[report]") {
  std::string text = human_format(sample_report());
  REQUIRE(text.find("alpha") != std::string::npos);
  REQUIRE(text.find("beta") != std::string::npos);
  REQUIRE(text.find("gamma") != std::string::npos);
  REQUIRE(text.find("something broke") != std::string::npos);
  REQUIRE(text.find("1 passed, 1 failed, 1 skipped") != std::string::npos);
}

TEST_CASE("golden values freeze derived quantities only", "[report]") {
  VerificationReport rep = sample_report();
  GoldenMap g = golden_from_report(rep);
  REQUIRE(g.size() == 1);
  REQUIRE(g.at("alpha").at("scalar") == "-2");
  REQUIRE(g.at("alpha").count("order") == 0);

  GoldenMap back = parse_golden(golden_format(g));
  REQUIRE(back == g);
  REQUIRE_THROWS_AS(parse_golden("{\"format\":\"other/1\",\"values\":{}}"),
                    std::invalid_argument);

  SECTION("matching golden values leave the report untouched") {
    REQUIRE(assert_golden(rep, g) == 0);
    REQUIRE(rep.records[0].status == CheckStatus::pass);
  }
  SECTION("a mismatch flips the record to fail") {
    g["alpha"]["scalar"] = "17";
    REQUIRE(assert_golden(rep, g) == 1);
    REQUIRE(rep.records[0].status == CheckStatus::fail);
    REQUIRE(rep.records[0].error.find("golden mismatch") != std::string::npos);
    REQUIRE(rep.records[0].error.find("17") != std::string::npos);
  }
  SECTION("golden names missing from the report are noted, not failed") {
    g["alpha"]["vanished"] = "0";
    REQUIRE(assert_golden(rep, g) == 0);
    REQUIRE(rep.records[0].status == CheckStatus::pass);
    bool noted = false;
    for (const auto& n : rep.records[0].notes)
      noted = noted || n.find("vanished") != std::string::npos;
    REQUIRE(noted);
  }
}

TEST_CASE("check registry exposes the documented ids in order", "[report]") {
  std::vector<std::string> expect = {
      "group",           "isotypic",       "points",
      "relations",       "f-consistency",  "generic-finiteness",
      "singular-containment", "hessian-ranks", "reducedness-witness",
      "section-supports", "puredim-witness", "unique-decic"};
  REQUIRE(check_ids() == expect);
  int expensive = 0;
  for (const auto& d : check_registry()) expensive += d.expensive ? 1 : 0;
  REQUIRE(expensive == 1);
}

TEST_CASE("unknown check ids are rejected with the valid list", "[report]") {
  CheckContext ctx;
  try {
    run_checks(ctx, {"group", "no-such-check"});
    FAIL("expected std::invalid_argument");
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    REQUIRE(msg.find("no-such-check") != std::string::npos);
    REQUIRE(msg.find("unique-decic") != std::string::npos);
  }
}

TEST_CASE("selected checks run in registry order and are timed", "[report]") {
  CheckContext ctx;
  VerificationReport rep = run_checks(ctx, {"isotypic", "group"});
  REQUIRE(rep.records.size() == 2);
  REQUIRE(rep.records[0].id == "group");  // registry order, not selection order
  REQUIRE(rep.records[1].id == "isotypic");
  for (const auto& r : rep.records) {
    REQUIRE(r.status == CheckStatus::pass);
    REQUIRE(r.millis >= 0);
  }
  REQUIRE(rep.exit_code() == 0);
  REQUIRE(rep.find("group") != nullptr);
  REQUIRE(rep.find("absent") == nullptr);

  VerificationReport again = run_checks(ctx, {"group", "isotypic"});
  REQUIRE(canonical_body(again) == canonical_body(rep));  // reruns are reproducible
}

TEST_CASE("explicitly selecting the expensive check runs it", "[report]") {
  // Only the selection pathway is exercised here; the check itself runs in
  // the acceptance suite.
  CheckContext ctx;
  REQUIRE(!ctx.run_expensive);
  const CheckDef* def = nullptr;
  for (const auto& d : check_registry())
    if (d.id == "unique-decic") def = &d;
  REQUIRE(def != nullptr);
  REQUIRE(def->expensive);
}

TEST_CASE("input files accept ring declarations and bindings", "[input]") {
  InputFile in = parse_input(
      "# comment\n"
      "ring QQ a b c\n"
      "let p = (a + b)^2 - 2*a*b\n"
      "let q = p - a^2 - b^2\n"
      "\n");
  REQUIRE(in.ring->vars.size() == 3);
  REQUIRE(in.order == std::vector<std::string>{"p", "q"});
  REQUIRE(in.lookup("q").is_zero());
  REQUIRE(in.lookup("p").degree() == 2);
  REQUIRE_THROWS_AS(in.lookup("r"), std::runtime_error);

  auto both = in.lookup_list("p,q");
  REQUIRE(both.size() == 2);
  REQUIRE(both[1].is_zero());
}

TEST_CASE("input files import the built-in constants", "[input]") {
  InputFile in = parse_input(
      "ring QQ u0 u1 u2 u3 u4\n"
      "use paper-constants\n"
      "let probe = f - f\n");
  REQUIRE(in.lookup("probe").is_zero());
  REQUIRE(in.lookup("f").degree() == 10);
  REQUIRE(in.lookup("H0").degree() == 1);
  REQUIRE(in.lookup("Q1").degree() == 2);
  // Constants living in other rings are imported alongside.
  REQUIRE(in.lookup("U0").ring()->vars.size() == 8);
  REQUIRE(in.lookup("F1").ring()->field->kind == FieldKind::Gaussian);
}

TEST_CASE("input files report line-tagged errors", "[input]") {
  REQUIRE_THROWS_AS(parse_input("let p = 1\n"), InputError);          // no ring yet
  REQUIRE_THROWS_AS(parse_input("ring QQ a\nlet a = 1\n"), InputError);  // shadows a var
  REQUIRE_THROWS_AS(parse_input("ring QQ a\nlet p = 1\nlet p = 2\n"), InputError);
  REQUIRE_THROWS_AS(parse_input("ring GF(6) a\n"), InputError);       // 6 is not prime
  REQUIRE_THROWS_AS(parse_input("ring QQ a\nlet p = q + 1\n"), InputError);
  try {
    parse_input("ring QQ a\nlet p = (a\n");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    REQUIRE(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("parser resolves bound names inside expressions", "[input]") {
  RingRef r = make_ring(field_QQ(), {"x", "y"});
  std::map<std::string, Polynomial> bind;
  bind.emplace("square", parse_polynomial(r, "x^2 + y^2"));
  Polynomial p = parse_polynomial(r, "square - x^2", &bind);
  REQUIRE(p == parse_polynomial(r, "y^2"));

  RingRef other = make_ring(field_QQ(), {"z"});
  std::map<std::string, Polynomial> wrong;
  wrong.emplace("square", parse_polynomial(other, "z^2"));
  REQUIRE_THROWS_AS(parse_polynomial(r, "square", &wrong), ParseError);
  REQUIRE_THROWS_AS(parse_polynomial(r, "undefined_name", nullptr), ParseError);
}
