#include "fko/witness.hpp"

#include <algorithm>

#include "json.hpp"

namespace fko {

namespace {

using nlohmann::json;

Verdict reject(Conjunct c, std::string detail) {
  Verdict v;
  v.failed = c;
  v.detail = std::move(detail);
  return v;
}

// Certificate slack, or throws SpectralError when the certificate fails.
Rat checked_slack(const FkoWitness& w, const Cnf& k) {
  const QMat m = build_m(k);
  const CertReport rep = certify_eigvalbound(m, w.cert);
  if (!rep.all_pass()) {
    throw SpectralError("certificate fails condition " + std::to_string(rep.first_failure()));
  }
  return rep.slack;
}

json rat_to_json(const Rat& q) { return json{{"num", q.num_str()}, {"den", q.den_str()}}; }

Rat rat_from_json(const json& j, const char* what) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() ||
      !j["den"].is_string()) {
    throw WitnessFormatError(std::string(what) + ": expected {\"num\": string, \"den\": string}");
  }
  try {
    return Rat::from_strings(j["num"].get<std::string>(), j["den"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw WitnessFormatError(std::string(what) + ": " + e.what());
  }
}

template <class T>
T uint_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw WitnessFormatError(std::string("missing or non-negative-integer field '") + key + "'");
  }
  return j[key].get<T>();
}

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw WitnessFormatError(std::string("missing field '") + key + "'");
  return j[key];
}

}  // namespace

const char* to_string(Conjunct c) {
  switch (c) {
    case Conjunct::kNone: return "none";
    case Conjunct::k3Cnf: return "3CNF";
    case Conjunct::kColl: return "Coll";
    case Conjunct::kImb: return "Imb";
    case Conjunct::kMat: return "Mat";
    case Conjunct::kEigValBound: return "EigValBound";
    case Conjunct::kLambdaMax: return "lambda-max";
    case Conjunct::kInequality: return "inequality";
  }
  return "?";
}

const char* to_string(BuildStage s) {
  switch (s) {
    case BuildStage::kNone: return "none";
    case BuildStage::kCertification: return "certification";
    case BuildStage::kCollection: return "collection";
  }
  return "?";
}

Verdict verify_witness(const Cnf& k, const FkoWitness& w) {
  // 3CNF
  if (w.n != k.n() || w.m != k.m()) {
    return reject(Conjunct::k3Cnf, "witness is for n=" + std::to_string(w.n) + " m=" + std::to_string(w.m) +
                                       ", formula has n=" + std::to_string(k.n()) + " m=" + std::to_string(k.m()));
  }
  try {
    Cnf copy(k.n(), k.clauses());
  } catch (const CnfError& e) {
    return reject(Conjunct::k3Cnf, e.what());
  }

  // Coll
  const CollCheck coll = check_collection(w.collection, k);
  if (!coll.ok) {
    return reject(Conjunct::kColl, std::string(to_string(coll.violation)) + ": " + coll.detail);
  }

  // Imb
  const std::size_t imb = imbalance(k);
  if (w.imbalance != imb) {
    return reject(Conjunct::kImb, "I=" + std::to_string(w.imbalance) + ", recomputed " + std::to_string(imb));
  }

  // Mat
  const QMat m = build_m(k);
  if (w.m_matrix.n() != 0 && !(w.m_matrix == m)) {
    return reject(Conjunct::kMat, "M differs from the clause-polarity matrix");
  }

  // EigValBound
  if (w.cert.vectors.n() != k.n() || w.cert.lambdas.size() != k.n()) {
    return reject(Conjunct::kEigValBound, "certificate dimension does not match n");
  }
  if (w.cert.c < 1) return reject(Conjunct::kEigValBound, "precision exponent c must be >= 1");
  const CertReport rep = certify_eigvalbound(m, w.cert);
  if (!rep.all_pass()) {
    return reject(Conjunct::kEigValBound, "condition " + std::to_string(rep.first_failure()) +
                                              " fails (rho=" + rep.rho.str() + " tau=" + rep.tau.str() + ")");
  }

  // lambda-max
  if (w.lambda != max_lambda(w.cert)) {
    return reject(Conjunct::kLambdaMax, "lambda=" + w.lambda.str() + ", max eigenvalue " + max_lambda(w.cert).str());
  }

  // inequality
  if (w.epsilon.sign() <= 0) return reject(Conjunct::kInequality, "epsilon must be positive");
  const Rat margin = std::max(w.epsilon, rep.slack);
  const Rat u = w.lambda * Rat(static_cast<unsigned long>(k.n())) + margin;
  const Rat rhs = Rat(static_cast<unsigned long>(w.collection.d)) * (Rat(static_cast<unsigned long>(imb)) + u) / Rat(2);
  const Rat t(static_cast<unsigned long>(w.collection.t));
  if (!(t > rhs)) {
    return reject(Conjunct::kInequality, "t=" + t.str() + " <= d(I+U)/2=" + rhs.str());
  }

  Verdict v;
  v.accepted = true;
  v.u = u;
  v.margin = margin;
  v.unsat_lower = unsat3xor_lower_bound(w);
  v.detail = "t=" + t.str() + " > d(I+U)/2=" + rhs.str();
  return v;
}

BuildResult build_witness(const Cnf& k, const BuildOptions& opts) {
  BuildResult r;
  FkoWitness& w = r.witness;
  w.n = k.n();
  w.m = k.m();
  w.imbalance = imbalance(k);
  w.m_matrix = build_m(k);
  w.collection.d = opts.d;
  if (k.n() == 0) {
    r.failed = BuildStage::kCollection;
    r.detail = "formula has no variables";
    return r;
  }

  try {
    w.cert = approx_eigen(w.m_matrix, EigenOptions{opts.c, EigenOptions{}.max_sweeps});
  } catch (const SpectralError& e) {
    r.failed = BuildStage::kCertification;
    r.detail = e.what();
    return r;
  }
  const CertReport rep = certify_eigvalbound(w.m_matrix, w.cert);
  w.lambda = max_lambda(w.cert);
  if (!rep.all_pass()) {
    r.failed = BuildStage::kCertification;
    r.detail = "condition " + std::to_string(rep.first_failure()) + " fails (rho=" +
               std::to_string(rep.rho.to_double()) + " tau=" + std::to_string(rep.tau.to_double()) + ")";
    return r;
  }

  const mpz_class grid = grid_denominator(k.n(), opts.c);
  w.epsilon = Rat(mpz_class((rep.slack * Rat(grid)).ceil() + 1), grid);

  const Rat rhs = Rat(static_cast<unsigned long>(opts.d)) *
                  (Rat(static_cast<unsigned long>(w.imbalance)) + w.lambda * Rat(static_cast<unsigned long>(k.n())) +
                   w.epsilon) /
                  Rat(2);
  r.t_target = static_cast<std::size_t>(mpz_class(rhs.floor() + 1).get_ui());

  SearchOptions so;
  so.k_max = opts.k_max;
  so.d = opts.d;
  so.t_target = r.t_target;
  so.seed = opts.seed;
  so.budget = opts.budget;
  SearchResult found = find_collection(k, so);
  w.collection = std::move(found.collection);
  if (!found.ok) {
    r.failed = BuildStage::kCollection;
    r.detail = "found t=" + std::to_string(w.collection.t) + ", need " + std::to_string(r.t_target);
    return r;
  }
  r.ok = true;
  return r;
}

Rat nae_upper_bound(const FkoWitness& w, const Cnf& k) {
  const Rat slack = checked_slack(w, k);
  return (w.lambda * Rat(static_cast<unsigned long>(k.n())) + Rat(3) * Rat(static_cast<unsigned long>(k.m())) +
          slack) /
         Rat(4);
}

Rat two_lit_upper_bound(const FkoWitness& w, const Cnf& k) {
  const Rat slack = checked_slack(w, k);
  return (Rat(static_cast<unsigned long>(imbalance(k))) + w.lambda * Rat(static_cast<unsigned long>(k.n())) +
          slack) /
         Rat(2);
}

std::size_t unsat3xor_lower_bound(const FkoWitness& w) {
  const std::size_t t = w.collection.t, d = w.collection.d;
  if (t == 0) return 0;
  if (d == 0) throw std::invalid_argument("reuse bound d = 0 with a non-empty collection");
  return (t + d - 1) / d;
}

// JSON ---------------------------------------------------------------------

std::string witness_to_json(const FkoWitness& w) {
  json j;
  j["n"] = w.n;
  j["m"] = w.m;
  j["c"] = w.cert.c;
  j["I"] = w.imbalance;
  j["lambda"] = rat_to_json(w.lambda);
  json lambdas = json::array();
  for (const auto& l : w.cert.lambdas) lambdas.push_back(rat_to_json(l));
  j["lambdas"] = std::move(lambdas);
  json v = json::array();
  for (std::size_t i = 0; i < w.cert.vectors.n(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < w.cert.vectors.n(); ++c) row.push_back(rat_to_json(w.cert.vectors(i, c)));
    v.push_back(std::move(row));
  }
  j["V"] = std::move(v);
  json tuples = json::array();
  for (const auto& t : w.collection.tuples) tuples.push_back(t.clause_indices);
  j["D"] = {{"t", w.collection.t}, {"k", w.collection.k}, {"d", w.collection.d}, {"tuples", std::move(tuples)}};
  j["epsilon"] = rat_to_json(w.epsilon);
  j["K3"] = rat_to_json(w.cert.k3);
  j["K4"] = rat_to_json(w.cert.k4);
  j["K5"] = rat_to_json(w.cert.k5);
  return j.dump() + "\n";
}

FkoWitness witness_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw WitnessFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw WitnessFormatError("witness must be a JSON object");

  FkoWitness w;
  w.n = uint_field<std::uint32_t>(j, "n");
  w.m = uint_field<std::size_t>(j, "m");
  w.cert.c = uint_field<unsigned>(j, "c");
  w.imbalance = uint_field<std::size_t>(j, "I");
  w.lambda = rat_from_json(field(j, "lambda"), "lambda");

  const json& lambdas = field(j, "lambdas");
  if (!lambdas.is_array()) throw WitnessFormatError("lambdas must be an array");
  for (const auto& l : lambdas) w.cert.lambdas.push_back(rat_from_json(l, "lambdas[]"));

  const json& v = field(j, "V");
  if (!v.is_array()) throw WitnessFormatError("V must be an array");
  const std::size_t rows = v.size();
  w.cert.vectors = QMat(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!v[i].is_array() || v[i].size() != rows) throw WitnessFormatError("V must be square");
    for (std::size_t c = 0; c < rows; ++c) w.cert.vectors(i, c) = rat_from_json(v[i][c], "V[][]");
  }

  const json& d = field(j, "D");
  if (!d.is_object()) throw WitnessFormatError("D must be an object");
  w.collection.t = uint_field<std::size_t>(d, "t");
  w.collection.k = uint_field<std::size_t>(d, "k");
  w.collection.d = uint_field<std::size_t>(d, "d");
  const json& tuples = field(d, "tuples");
  if (!tuples.is_array()) throw WitnessFormatError("D.tuples must be an array");
  for (const auto& t : tuples) {
    if (!t.is_array()) throw WitnessFormatError("each tuple must be an array");
    EvenTuple et;
    for (const auto& idx : t) {
      if (!idx.is_number_unsigned()) throw WitnessFormatError("tuple entries must be clause indices");
      et.clause_indices.push_back(idx.get<std::size_t>());
    }
    w.collection.tuples.push_back(std::move(et));
  }

  w.epsilon = rat_from_json(field(j, "epsilon"), "epsilon");
  w.cert.k3 = rat_from_json(field(j, "K3"), "K3");
  w.cert.k4 = rat_from_json(field(j, "K4"), "K4");
  w.cert.k5 = rat_from_json(field(j, "K5"), "K5");
  return w;
}

std::string verdict_to_json(const Verdict& v) {
  json j;
  j["accepted"] = v.accepted;
  if (v.accepted) {
    j["U"] = rat_to_json(v.u);
    j["unsat_lower"] = v.unsat_lower;
    j["margin"] = rat_to_json(v.margin);
  } else {
    j["reason"] = to_string(v.failed);
  }
  j["detail"] = v.detail;
  return j.dump();
}

}  // namespace fko
