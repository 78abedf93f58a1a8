#include "conirr/fixtures.hpp"

#include <algorithm>
#include <cctype>

#include "conirr/io.hpp"

namespace conirr {

namespace detail {
const std::map<std::string, std::string>& fixture_files();
}

namespace {

const std::vector<std::string> kProblemFixtures{"EX1", "EX2", "EX3", "EX4", "EX4_SPARSE", "CEX"};

std::string file_key(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return name;
}

RationalMatrix eval_template(const std::vector<std::vector<std::string>>& t,
                             const Ex4Parameters& params) {
  for (const Rational& x : params)
    if (x < 0) throw std::invalid_argument("appendix parameters must be nonnegative");
  RationalMatrix out(static_cast<Index>(t.size()), static_cast<Index>(t.front().size()));
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      Rational v = 0;
      int sign = 1;
      for (char ch : t[i][j]) {
        if (ch == '-') sign = -1;
        else if (ch >= 'a' && ch <= 'g') v += sign * params[static_cast<std::size_t>(ch - 'a')];
      }
      out(static_cast<Index>(i), static_cast<Index>(j)) = v;
    }
  return out;
}

}  // namespace

std::vector<std::string> fixture_names() { return kProblemFixtures; }

const std::string& fixture_text(const std::string& name) {
  const auto& files = detail::fixture_files();
  auto it = files.find(file_key(name));
  if (it == files.end()) throw UnknownFixture(name);
  return it->second;
}

ProblemInstance load_fixture(const std::string& name, std::size_t face_limit) {
  if (std::none_of(kProblemFixtures.begin(), kProblemFixtures.end(),
                   [&](const std::string& n) { return file_key(n) == file_key(name); }))
    throw UnknownFixture(name);
  return parse_problem(fixture_text(name), face_limit);
}

const Ex4Appendix& ex4_appendix() {
  static const Ex4Appendix data = [] {
    const Json j = Json::parse(fixture_text("ex4_appendix"));
    Ex4Appendix out;
    const auto grid = [](const Json& rows) {
      RationalMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < rows[i].size(); ++k)
          m(static_cast<Index>(i), static_cast<Index>(k)) = parse_rational(rows[i][k].get<std::string>());
      return m;
    };
    out.p_matrix = grid(j.at("P"));
    out.p = grid(Json::array({j.at("p")})).transpose();
    for (const auto& [dim, sets] : j.at("faces").items()) {
      auto& bucket = out.faces[std::stol(dim)];
      for (const auto& s : sets) {
        std::vector<Index> idx;
        for (const auto& k : s) idx.push_back(k.get<Index>() - 1);
        bucket.push_back(std::move(idx));
      }
    }
    out.b_template = j.at("B_template").get<std::vector<std::vector<std::string>>>();
    out.q_template = j.at("Q_template").get<std::vector<std::vector<std::string>>>();
    return out;
  }();
  return data;
}

RationalMatrix appendix_Q(const Ex4Parameters& params) {
  return eval_template(ex4_appendix().q_template, params);
}

RationalMatrix appendix_B(const Ex4Parameters& params) {
  return eval_template(ex4_appendix().b_template, params);
}

}  // namespace conirr
