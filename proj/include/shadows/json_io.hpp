#pragma once

#include <json.hpp>

#include "shadows/coset_count.hpp"

namespace shadows {

using nlohmann::json;

// Elements travel as {"translation": [ints], "finite_word": [letters 1..n]};
// words as arrays of integers 0..n.

json to_json(const RootSystem& rs, const AffineWeylElement& x);
AffineWeylElement element_from_json(const RootSystem& rs, const json& j);

json to_json(const FaceType& face);
FaceType face_from_json(const RootSystem& rs, const json& j);

json to_json(const RootSystem& rs, const Chimney& c);
Chimney chimney_from_json(const RootSystem& rs, const json& j);

json to_json(const RootSystem& rs, const Gallery& g);
Gallery gallery_from_json(const RootSystem& rs, const json& j);

json to_json(const RootSystem& rs, const EndSimplex& s);
EndSimplex end_simplex_from_json(const RootSystem& rs, const json& j);

/// Full shadow document, simplices in canonical order.
json shadow_document(const RootSystem& rs, const Chimney& c, const AffineWeylElement& x,
                     const FaceType& sigma, const FaceType& tau, const ShadowResult& result);
ShadowResult shadow_from_json(const RootSystem& rs, const json& j);

json count_document(const QPolynomial& p);
QPolynomial count_from_json(const json& j);

}  // namespace shadows
