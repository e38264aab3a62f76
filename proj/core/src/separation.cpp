#include "pgog/separation.hpp"

#include <algorithm>
#include <map>
#include <regex>

#include "pgog/amalgam.hpp"
#include "pgog/error.hpp"
#include "pgog/graph_of_groups.hpp"
#include "pgog/prime_level.hpp"
#include "pgog/tower.hpp"
#include "pgog/witness_models.hpp"

namespace pgog {

namespace {

// Normal forms are only attempted when the vertex groups are this small.
constexpr std::uint64_t kNormalFormBudget = std::uint64_t{1} << 16;

struct Letters {
  std::uint32_t max_vertex = 0;  // largest i among G{i} letters
  std::vector<std::int64_t> t_syllables;  // t-exponent sums of lamplighter runs
};

bool is_lamplighter(std::string const& name) { return name.rfind("L.", 0) == 0; }

std::uint32_t vertex_index(std::string const& name) {
  return static_cast<std::uint32_t>(std::stoul(name.substr(1, name.find('.') - 1)));
}

Letters analyse(JWord const& jw, std::uint32_t p) {
  Letters out;
  std::map<std::uint32_t, ModelPtr> seen;
  bool in_run = false;
  for (Letter const& l : jw.word.letters()) {
    std::string const& name = jw.names[l.gen];
    if (is_lamplighter(name)) {
      if (!in_run) out.t_syllables.push_back(0);
      in_run = true;
      if (name == "L.t") out.t_syllables.back() += l.exp;
      continue;
    }
    in_run = false;
    std::uint32_t const i = vertex_index(name);
    auto [it, fresh] = seen.try_emplace(i, nullptr);
    if (fresh) it->second = make_g(p, i);
    if (!it->second->find_generator(name.substr(name.find('.') + 1))) {
      throw Error("G_" + std::to_string(i) + " has no generator " + name.substr(name.find('.') + 1));
    }
    out.max_vertex = std::max(out.max_vertex, i);
  }
  return out;
}

Specialisation level_witness(GraphOfGroups const& J, std::uint32_t p, std::uint32_t level) {
  return level <= 2 ? witness_j_to_e(J, p, level) : witness_j_to_chain(J, p, level);
}

/// The word read in the fundamental presentation of the level-l J graph.
Word at_level(JWord const& jw, FinitePresentation const& fp, std::uint64_t q) {
  return jw.word.renumber([&](std::size_t g) {
    std::string const& name = jw.names[g];
    if (name.rfind("L.h", 0) == 0) {
      return fp.index_of("L.h" + std::to_string(std::stoull(name.substr(3)) % q));
    }
    return fp.index_of(name);
  });
}

struct Evaluation {
  Element image;
  ModelPtr target;
  std::vector<std::string> broken;  // relators not preserved
};

Evaluation evaluate_at(JWord const& jw, GraphOfGroups const& J, FinitePresentation const& fp,
                       std::uint32_t p, std::uint32_t level) {
  Specialisation spec = level_witness(J, p, level);
  GroupHom hom = specialisation_hom(J, spec, fp);
  Evaluation out{evaluate(at_level(jw, fp, checked_power(p, level)), hom), spec.target, {}};
  for (std::size_t r : violated_relators(fp, hom)) {
    out.broken.push_back(fp.to_string(fp.relators()[r]));
  }
  return out;
}

}  // namespace

std::string_view to_string(SeparationCertificate::Outcome o) noexcept {
  switch (o) {
    case SeparationCertificate::Outcome::separated: return "separated";
    case SeparationCertificate::Outcome::trivial: return "trivial element";
    case SeparationCertificate::Outcome::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

JWord parse_j_word(std::string_view text) {
  static std::regex const letter(R"(G[1-9][0-9]*\.[A-Za-z_][A-Za-z0-9_]*|L\.h[0-9]+|L\.t)");
  JWord out;
  out.text = std::string(text);
  std::map<std::string, std::size_t, std::less<>> ids;
  out.word = parse_word(text, [&](std::string_view name) -> std::size_t {
    std::string s(name);
    if (!std::regex_match(s, letter)) {
      throw Error("'" + s + "' is not a letter G<i>.<gen>, L.h<j> or L.t");
    }
    auto [it, fresh] = ids.try_emplace(s, out.names.size());
    if (fresh) out.names.push_back(s);
    return it->second;
  });
  return out;
}

ModelPtr separation_witness(std::uint32_t p, std::uint32_t level) {
  return level <= 2 ? make_en_witness(p, level) : make_chain_witness(p, level, true);
}

SeparationCertificate separate(std::string_view word, std::uint32_t p, std::uint32_t start_level,
                               std::uint32_t max_level) {
  if (!is_prime(p)) throw Error("p must be prime");
  if (start_level < 1 || start_level > max_level) throw Error("need 1 <= start_level <= max_level");
  SeparationCertificate cert;
  cert.word = std::string(word);
  cert.p = p;
  JWord const jw = parse_j_word(word);
  if (jw.word.empty()) {
    cert.outcome = SeparationCertificate::Outcome::trivial;
    return cert;
  }
  Letters const info = analyse(jw, p);

  for (std::uint32_t level = start_level; level <= max_level; ++level) {
    LevelAttempt at;
    at.level = level;
    std::uint64_t const q = checked_power(p, level);
    at.letters_fit = info.max_vertex <= level;
    at.lamplighter_ok = std::all_of(info.t_syllables.begin(), info.t_syllables.end(),
                                    [&](std::int64_t s) {
                                      return s == 0 || s % static_cast<std::int64_t>(q) != 0;
                                    });
    if (!at.letters_fit || !at.lamplighter_ok) {
      at.note = !at.letters_fit ? "letters from a higher vertex" : "a t-syllable folds into H";
      cert.attempts.push_back(at);
      continue;
    }
    GraphOfGroups const J = build_j(p, level);
    FinitePresentation const fp = fundamental_presentation(J);
    Evaluation ev = evaluate_at(jw, J, fp, p, level);
    if (!ev.broken.empty()) {
      throw Error("witness at level " + std::to_string(level) + " breaks relator " + ev.broken[0]);
    }
    at.image_nontrivial = ev.image != ev.target->identity();

    std::uint64_t size = 0;
    for (VertexGroup const& v : J.vertices()) {
      size += checked_power(p, static_cast<std::uint32_t>(v.model->order_log()));
    }
    if (size <= kNormalFormBudget) {
      PathAmalgam A(J);
      ReducedWord nf = A.normal_form(at_level(jw, fp, q), fp);
      at.syllables = nf.syllables();
      at.normal_form = nf.empty() ? Status::fail : Status::pass;
      if (nf.empty() && at.image_nontrivial) {
        throw Error("normal form is empty but the witness image is not");
      }
    } else {
      at.normal_form = Status::unknown;
      at.note = "normal form skipped: vertex groups too large";
    }
    cert.attempts.push_back(at);
    if (at.image_nontrivial) {
      cert.outcome = SeparationCertificate::Outcome::separated;
      cert.level = level;
      cert.witness = ev.target->name();
      cert.image.assign(ev.image.coords().begin(), ev.image.coords().end());
      return cert;
    }
  }
  cert.outcome = SeparationCertificate::Outcome::inconclusive;
  return cert;
}

std::optional<std::string> verify_certificate(SeparationCertificate const& cert) {
  if (cert.outcome != SeparationCertificate::Outcome::separated) {
    return std::string("certificate does not claim separation");
  }
  JWord const jw = parse_j_word(cert.word);
  GraphOfGroups const J = build_j(cert.p, cert.level);
  FinitePresentation const fp = fundamental_presentation(J);
  Evaluation ev = evaluate_at(jw, J, fp, cert.p, cert.level);
  if (!ev.broken.empty()) return "witness breaks relator " + ev.broken[0];
  if (ev.target->name() != cert.witness) return "witness model differs: " + ev.target->name();
  std::vector<std::uint32_t> coords(ev.image.coords().begin(), ev.image.coords().end());
  if (coords != cert.image) return std::string("image differs from the stored one");
  if (ev.image == ev.target->identity()) return std::string("image is trivial");
  return std::nullopt;
}

}  // namespace pgog
