// Exercises the shared library strictly through its C interface.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <symtau/symtau.h>

#include <string>

namespace {

// Takes ownership of a C string from the library and exposes it as std::string.
std::string take(char* text) {
  if (text == nullptr) return {};
  std::string out(text);
  symtau_string_free(text);
  return out;
}

struct SpecHandle {
  symtau_spec* p = nullptr;
  explicit SpecHandle(long genus) : p(symtau_spec_new(genus)) {}
  explicit SpecHandle(symtau_spec* raw) : p(raw) {}
  ~SpecHandle() { symtau_spec_free(p); }
  SpecHandle(const SpecHandle&) = delete;
  SpecHandle& operator=(const SpecHandle&) = delete;
};

}  // namespace

TEST_CASE("version string") {
  CHECK(std::string(symtau_version()) == "0.1.0");
}

TEST_CASE("builder flow solves a double cover") {
  SpecHandle spec(33);
  REQUIRE(spec.p != nullptr);
  REQUIRE(symtau_spec_add_cover(spec.p, 2, 4, -1) == SYMTAU_OK);

  symtau_result* result = nullptr;
  REQUIRE(symtau_solve(spec.p, &result) == SYMTAU_OK);
  REQUIRE(result != nullptr);
  CHECK(symtau_result_exact(result) == 1);
  CHECK(symtau_result_consistent(result) == 1);
  CHECK(take(symtau_result_value(result)) == "25");
  CHECK(take(symtau_result_lower(result)) == "25");
  CHECK(take(symtau_result_upper(result)) == "25");

  std::string render = take(symtau_result_render(result, 0));
  CHECK(render == "tau = 25\n");
  std::string with_trace = take(symtau_result_render(result, 1));
  CHECK(with_trace.find("derivation:") != std::string::npos);

  size_t n = symtau_result_trace_size(result);
  REQUIRE(n >= 1);
  for (size_t i = 0; i < n; ++i) {
    std::string line = take(symtau_result_trace_line(result, i));
    CHECK_FALSE(line.empty());
  }
  CHECK(symtau_result_trace_line(result, n) == nullptr);

  symtau_result_free(result);
}

TEST_CASE("interval results have no exact value") {
  SpecHandle spec(16);
  REQUIRE(symtau_spec_add_pencil(spec.p, 5, 1, nullptr) == SYMTAU_OK);

  symtau_result* result = nullptr;
  REQUIRE(symtau_solve(spec.p, &result) == SYMTAU_OK);
  CHECK(symtau_result_exact(result) == 0);
  CHECK(symtau_result_value(result) == nullptr);
  CHECK(take(symtau_result_lower(result)) == "4");
  CHECK(take(symtau_result_upper(result)) == "9");
  CHECK(take(symtau_result_render(result, 0)) == "tau in [4, 9]\n");
  symtau_result_free(result);
}

TEST_CASE("json parsing and serialization through the C layer") {
  SpecHandle spec(symtau_spec_parse_json(
      R"({"genus": 10, "pencils": [{"degree": 3}], "hyperelliptic": "no"})"));
  REQUIRE(spec.p != nullptr);

  std::string text = take(symtau_spec_to_json(spec.p));
  CHECK(text.find("\"genus\": 10") != std::string::npos);

  symtau_result* result = nullptr;
  REQUIRE(symtau_solve(spec.p, &result) == SYMTAU_OK);
  CHECK(take(symtau_result_value(result)) == "5");
  symtau_result_free(result);
}

TEST_CASE("parse errors surface through last_error") {
  symtau_spec* bad = symtau_spec_parse_json(R"({"genus": 9, "pencls": []})");
  CHECK(bad == nullptr);
  CHECK(std::string(symtau_last_error()).find("unknown key \"pencls\"") != std::string::npos);
}

TEST_CASE("validation errors leave the result null") {
  SpecHandle spec(9);
  REQUIRE(symtau_spec_set_flag(spec.p, "hyperelliptic", "yes") == SYMTAU_OK);
  REQUIRE(symtau_spec_add_cover(spec.p, 2, 2, -1) == SYMTAU_OK);

  symtau_result* result = nullptr;
  CHECK(symtau_solve(spec.p, &result) == SYMTAU_ERR_VALIDATION);
  CHECK(result == nullptr);
  CHECK(std::string(symtau_last_error()).find("exceeds the bound") != std::string::npos);
}

TEST_CASE("inconsistent specifications still return a result") {
  SpecHandle spec(9);
  REQUIRE(symtau_spec_add_pencil(spec.p, 4, 1, "yes") == SYMTAU_OK);
  REQUIRE(symtau_spec_add_cover(spec.p, 2, 2, -1) == SYMTAU_OK);

  symtau_result* result = nullptr;
  CHECK(symtau_solve(spec.p, &result) == SYMTAU_ERR_INCONSISTENT);
  REQUIRE(result != nullptr);
  CHECK(symtau_result_consistent(result) == 0);
  std::string render = take(symtau_result_render(result, 0));
  CHECK(render.find("inconsistent specification") != std::string::npos);
  symtau_result_free(result);
}

TEST_CASE("effective classes and flag validation") {
  SpecHandle spec(12);
  REQUIRE(symtau_spec_add_effective_class(spec.p, 3, 1) == SYMTAU_OK);

  symtau_result* result = nullptr;
  REQUIRE(symtau_solve(spec.p, &result) == SYMTAU_OK);
  CHECK(take(symtau_result_lower(result)) == "4");
  symtau_result_free(result);

  CHECK(symtau_spec_set_flag(spec.p, "trigonal", "yes") == SYMTAU_ERR_ARGUMENT);
  CHECK(symtau_spec_set_flag(spec.p, "hyperelliptic", "maybe") == SYMTAU_ERR_ARGUMENT);
  CHECK(symtau_spec_add_pencil(spec.p, 3, 1, "sometimes") == SYMTAU_ERR_ARGUMENT);
  CHECK(symtau_spec_set_flag(nullptr, "hyperelliptic", "yes") == SYMTAU_ERR_ARGUMENT);
}

TEST_CASE("decomposition through the C layer") {
  SpecHandle spec(20);
  REQUIRE(symtau_spec_add_pencil(spec.p, 4, 1, nullptr) == SYMTAU_OK);

  symtau_decomposition* dec = nullptr;
  REQUIRE(symtau_decompose(spec.p, 4, &dec) == SYMTAU_OK);
  REQUIRE(dec != nullptr);
  CHECK(symtau_decomposition_scenarios(dec) == 3);
  CHECK(symtau_decomposition_rejections(dec) == 0);
  std::string table = take(symtau_decomposition_render(dec, 0));
  CHECK(table.find("max{h, g - 2h}") != std::string::npos);
  symtau_decomposition_free(dec);

  // Degree without a declared or implied pencil.
  symtau_decomposition* missing = nullptr;
  CHECK(symtau_decompose(spec.p, 5, &missing) == SYMTAU_ERR_ARGUMENT);
  CHECK(missing == nullptr);
}

TEST_CASE("cycle tables through the C layer") {
  long long nums[3] = {0, 0, 0};
  REQUIRE(symtau_cover_cycle(2, 0, 5, nums) == SYMTAU_OK);
  CHECK(nums[0] == 1);
  CHECK(nums[1] == 0);
  CHECK(nums[2] == 12);

  REQUIRE(symtau_b_cycle(3, 1, 26, 2, nums) == SYMTAU_OK);
  CHECK(nums[0] == 2);
  CHECK(nums[1] == 29);
  CHECK(nums[2] == 50);

  // Riemann-Hurwitz violation.
  CHECK(symtau_cover_cycle(2, 5, 5, nums) == SYMTAU_ERR_ARGUMENT);
  CHECK(symtau_b_cycle(3, 1, 26, 7, nums) == SYMTAU_ERR_ARGUMENT);
  CHECK(symtau_cover_cycle(2, 0, 5, nullptr) == SYMTAU_ERR_ARGUMENT);

  std::string table = take(symtau_table_render(3, 1, 26, 2));
  CHECK(table.find("Sigma") != std::string::npos);
  CHECK(table.find("B(H)") != std::string::npos);
  std::string no_b = take(symtau_table_render(3, 1, 26, 0));
  CHECK(no_b.find("Sigma") != std::string::npos);
  CHECK(no_b.find("B(H)") == std::string::npos);
  CHECK(symtau_table_render(2, 9, 5, 0) == nullptr);
}

TEST_CASE("null handles are rejected uniformly") {
  symtau_result* result = nullptr;
  CHECK(symtau_solve(nullptr, &result) == SYMTAU_ERR_ARGUMENT);
  CHECK(result == nullptr);
  CHECK(symtau_solve(reinterpret_cast<symtau_spec*>(0), &result) == SYMTAU_ERR_ARGUMENT);
  CHECK(symtau_spec_add_pencil(nullptr, 3, 1, nullptr) == SYMTAU_ERR_ARGUMENT);
  CHECK(symtau_spec_add_cover(nullptr, 2, 0, -1) == SYMTAU_ERR_ARGUMENT);
  CHECK(symtau_result_exact(nullptr) == 0);
  CHECK(symtau_result_value(nullptr) == nullptr);
  CHECK(symtau_result_trace_size(nullptr) == 0);
  symtau_decomposition* dec = nullptr;
  CHECK(symtau_decompose(nullptr, 4, &dec) == SYMTAU_ERR_ARGUMENT);
  // Free functions tolerate NULL.
  symtau_spec_free(nullptr);
  symtau_result_free(nullptr);
  symtau_decomposition_free(nullptr);
  symtau_string_free(nullptr);
}
