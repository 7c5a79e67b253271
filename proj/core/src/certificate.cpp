#include "rrlearn/certificate.hpp"

#include "rrlearn/errors.hpp"

namespace rrl {

bool is_abstention(const Certificate& cert) { return cert.c_high <= cert.c_low; }

bool operator==(const Certificate& a, const Certificate& b) {
  return a.label == b.label && a.c_low == b.c_low && a.c_high == b.c_high;
}

nlohmann::json certificate_to_json(const Certificate& cert) {
  return nlohmann::json{{"label", cert.label},
                        {"c_low", cert.c_low.to_json()},
                        {"c_high", cert.c_high.to_json()}};
}

Certificate certificate_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("label") && j.contains("c_low") && j.contains("c_high"),
          ErrorCode::BadModel, "certificate needs label/c_low/c_high");
  Certificate cert;
  cert.label = j.at("label").get<std::string>();
  cert.c_low = Complexity::from_json(j.at("c_low"));
  cert.c_high = Complexity::from_json(j.at("c_high"));
  return cert;
}

Certificate make_certificate(const std::vector<std::string>& alphabet,
                             const std::vector<Complexity>& per_label) {
  require(alphabet.size() == per_label.size() && alphabet.size() >= 2, ErrorCode::Internal,
          "make_certificate: need one complexity per label");
  std::size_t best = 0;
  for (std::size_t i = 1; i < per_label.size(); ++i)
    if (per_label[i] < per_label[best]) best = i;  // ties keep the earlier label
  Complexity second = Complexity::infinity();
  bool have_second = false;
  for (std::size_t i = 0; i < per_label.size(); ++i) {
    if (i == best) continue;
    if (!have_second || per_label[i] < second) {
      second = per_label[i];
      have_second = true;
    }
  }
  return Certificate{alphabet[best], per_label[best], second};
}

}  // namespace rrl
