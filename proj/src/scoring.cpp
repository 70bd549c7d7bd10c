#include "signmotif/scoring.hpp"

#include <cmath>
#include <stdexcept>

namespace signmotif {

Prior Prior::compute(const MaskedGraph& view) {
  std::size_t pos = 0, neg = 0;
  const SignedGraph& g = view.graph();
  for (LinkId li = 0; li < g.link_count(); ++li) {
    auto s = view.known_sign(li);
    if (!s) continue;
    if (*s == Sign::Positive)
      ++pos;
    else
      ++neg;
  }
  if (pos == 0 || neg == 0)
    throw std::invalid_argument(
        "prior undefined: view needs at least one known positive and one known "
        "negative link");
  Prior p;
  p.f_plus = double(pos) / double(pos + neg);
  p.f_minus = double(neg) / double(pos + neg);
  p.ratio = p.f_minus / p.f_plus;
  p.log_ratio = std::log(p.ratio);
  return p;
}

std::string_view score_variant_name(ScoreVariant v) {
  switch (v) {
    case ScoreVariant::Smnb: return "SMNB";
    case ScoreVariant::GsmnbCl: return "GSMNB-CL";
    case ScoreVariant::GsmnbCn: return "GSMNB-CN";
  }
  return "?";
}

std::optional<ScoreVariant> score_variant_from_name(std::string_view name) {
  if (name == "SMNB" || name == "smnb") return ScoreVariant::Smnb;
  if (name == "GSMNB-CL" || name == "gsmnb-cl") return ScoreVariant::GsmnbCl;
  if (name == "GSMNB-CN" || name == "gsmnb-cn") return ScoreVariant::GsmnbCn;
  return std::nullopt;
}

namespace {

double variant_sum(const PredictorProfile& pp, ScoreVariant variant) {
  switch (variant) {
    case ScoreVariant::Smnb: return pp.sum_log_plain;
    case ScoreVariant::GsmnbCl: return pp.sum_log_cl;
    case ScoreVariant::GsmnbCn: return pp.sum_log_cn;
  }
  return 0.0;
}

}  // namespace

LinkScore score_from_profile(const TargetProfile& profile, Predictor predictor,
                             ScoreVariant variant, const Prior& prior) {
  const PredictorProfile& pp = profile[predictor_index(predictor)];
  LinkScore score;
  score.entity_count = pp.entity_count;
  score.value = double(pp.entity_count) * prior.log_ratio + variant_sum(pp, variant);
  return score;
}

LinkScore gmmnb_from_profile(const TargetProfile& profile, ScoreVariant variant,
                             const Prior& prior) {
  LinkScore score;
  for (Predictor p : catalog()) {
    LinkScore single = score_from_profile(profile, p, variant, prior);
    score.value += single.value;
    score.entity_count += single.entity_count;
  }
  return score;
}

std::array<double, kNumPredictors> feature_vector_from_profile(
    const TargetProfile& profile, const Prior& prior) {
  std::array<double, kNumPredictors> features{};
  for (Predictor p : catalog())
    features[predictor_index(p)] =
        score_from_profile(profile, p, ScoreVariant::GsmnbCl, prior).value;
  return features;
}

LinkScore single_motif_score(const MaskedGraph& view, NodeId a, NodeId b,
                             Predictor predictor, ScoreVariant variant,
                             const Prior& prior, MatchOptions options) {
  const bool triad = predictor_kind(predictor) == MotifKind::Triad;
  const TargetProfile profile = target_profile(view, a, b, triad, !triad, options);
  return score_from_profile(profile, predictor, variant, prior);
}

LinkScore gmmnb_score(const MaskedGraph& view, NodeId a, NodeId b,
                      ScoreVariant variant, const Prior& prior,
                      MatchOptions options) {
  return gmmnb_from_profile(target_profile(view, a, b, true, true, options),
                            variant, prior);
}

std::array<double, kNumPredictors> feature_vector(const MaskedGraph& view, NodeId a,
                                                  NodeId b, const Prior& prior,
                                                  MatchOptions options) {
  return feature_vector_from_profile(target_profile(view, a, b, true, true, options),
                                     prior);
}

}  // namespace signmotif
