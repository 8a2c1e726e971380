#include "shadows/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace shadows {

namespace {

json vector_to_json(const IntVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

IntVector vector_from_json(const RootSystem& rs, const json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != rs.rank)
    throw std::invalid_argument("expected an integer vector of length " +
                                std::to_string(rs.rank));
  IntVector v(rs.rank);
  for (int i = 0; i < rs.rank; ++i) v[i] = j.at(i).get<Int>();
  return v;
}

std::vector<int> word_from_json(const RootSystem& rs, const json& j, int min_letter) {
  std::vector<int> word;
  for (const auto& e : j) {
    int s = e.get<int>();
    if (s < min_letter || s > rs.rank)
      throw std::invalid_argument("word letter " + std::to_string(s) + " out of range");
    word.push_back(s);
  }
  return word;
}

}  // namespace

json to_json(const RootSystem& rs, const AffineWeylElement& x) {
  AffineWeylElement finite{IntVector::Zero(rs.rank), x.finite};
  return json{{"translation", vector_to_json(x.translation)},
              {"finite_word", canonical_word(rs, finite)}};
}

AffineWeylElement element_from_json(const RootSystem& rs, const json& j) {
  IntVector translation = vector_from_json(rs, j.at("translation"));
  auto word = word_from_json(rs, j.at("finite_word"), 1);
  AffineWeylElement w = from_word(rs, word);
  return AffineWeylElement{translation, w.finite};
}

json to_json(const FaceType& face) { return json(face.generators); }

FaceType face_from_json(const RootSystem& rs, const json& j) {
  FaceType f;
  f.generators = word_from_json(rs, j, 1);
  std::sort(f.generators.begin(), f.generators.end());
  f.generators.erase(std::unique(f.generators.begin(), f.generators.end()), f.generators.end());
  return f;
}

json to_json(const RootSystem& rs, const Chimney& c) {
  return json{{"J", c.J}, {"y", to_json(rs, c.y)}};
}

Chimney chimney_from_json(const RootSystem& rs, const json& j) {
  Chimney c;
  c.J = face_from_json(rs, j.at("J")).generators;
  c.y = element_from_json(rs, j.at("y"));
  return c;
}

json to_json(const RootSystem& rs, const Gallery& g) {
  json steps = json::array();
  for (std::size_t i = 0; i < g.moves.size(); ++i)
    steps.push_back(json{{"letter", g.spec.word[i]},
                         {"move", g.moves[i] == Move::cross ? "cross" : "fold"}});
  return json{{"start_face", to_json(g.spec.start)},
              {"first_alcove", to_json(rs, g.first_alcove)},
              {"steps", steps},
              {"end_face", to_json(g.spec.end)}};
}

Gallery gallery_from_json(const RootSystem& rs, const json& j) {
  Gallery g;
  g.spec.start = face_from_json(rs, j.at("start_face"));
  g.spec.end = face_from_json(rs, j.at("end_face"));
  g.first_alcove = element_from_json(rs, j.at("first_alcove"));
  for (const auto& step : j.at("steps")) {
    int letter = step.at("letter").get<int>();
    if (letter < 0 || letter > rs.rank)
      throw std::invalid_argument("gallery letter out of range");
    g.spec.word.push_back(letter);
    std::string move = step.at("move").get<std::string>();
    if (move == "cross")
      g.moves.push_back(Move::cross);
    else if (move == "fold")
      g.moves.push_back(Move::fold);
    else
      throw std::invalid_argument("gallery move must be 'cross' or 'fold'");
  }
  return g;
}

json to_json(const RootSystem& rs, const EndSimplex& s) {
  json j{{"rep", to_json(rs, s.rep)}, {"face", to_json(s.face)}};
  if (static_cast<int>(s.face.generators.size()) == rs.rank)
    j["vertex"] = vector_to_json(s.rep.translation);
  return j;
}

EndSimplex end_simplex_from_json(const RootSystem& rs, const json& j) {
  return normalize_end_simplex(rs, element_from_json(rs, j.at("rep")),
                               face_from_json(rs, j.at("face")));
}

json shadow_document(const RootSystem& rs, const Chimney& c, const AffineWeylElement& x,
                     const FaceType& sigma, const FaceType& tau, const ShadowResult& result) {
  json entries = json::array();
  for (std::size_t i = 0; i < result.simplices.size(); ++i) {
    json e{{"simplex", to_json(rs, result.simplices[i])}};
    if (result.multiplicities) e["multiplicity"] = (*result.multiplicities)[i];
    entries.push_back(e);
  }
  return json{{"type", rs.name()},   {"J", c.J},
              {"y", to_json(rs, c.y)}, {"x", to_json(rs, x)},
              {"sigma", to_json(sigma)}, {"tau", to_json(tau)},
              {"shadow", entries}};
}

ShadowResult shadow_from_json(const RootSystem& rs, const json& j) {
  ShadowResult r;
  bool any_mult = false;
  std::vector<Int> mults;
  for (const auto& e : j.at("shadow")) {
    r.simplices.push_back(end_simplex_from_json(rs, e.at("simplex")));
    if (e.contains("multiplicity")) {
      any_mult = true;
      mults.push_back(e.at("multiplicity").get<Int>());
    } else {
      mults.push_back(1);
    }
  }
  if (any_mult) r.multiplicities = std::move(mults);
  return r;
}

json count_document(const QPolynomial& p) { return json{{"count", p.coefficients()}}; }

QPolynomial count_from_json(const json& j) {
  std::vector<Int> coeffs;
  for (const auto& e : j.at("count")) coeffs.push_back(e.get<Int>());
  return QPolynomial(std::move(coeffs));
}

}  // namespace shadows
