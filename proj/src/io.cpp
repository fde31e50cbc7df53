#include "etkk/io.hpp"

#include <fstream>

namespace etkk {

Int json_to_int(const Json& j) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  if (j.is_number_integer()) return Int(long(j.get<long long>()));
  throw Error("ParseError", "expected an integer (number or decimal string)");
}

Rat json_to_rat(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(long(j.get<long long>())));
  throw Error("ParseError", "expected a rational (\"num/den\" string)");
}

Json int_to_json(const Int& v) { return to_string(v); }

Json rat_to_json(const Rat& v) { return to_string(v); }

IntVec json_to_vec(const Json& j) {
  if (!j.is_array()) throw Error("ParseError", "expected an integer array");
  IntVec v(Index(j.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = json_to_int(j[i]);
  return v;
}

IntMat json_to_mat(const Json& j) {
  if (!j.is_array()) throw Error("ParseError", "expected a matrix (array of rows)");
  Index rows = Index(j.size());
  Index cols = rows > 0 ? Index(j[0].size()) : 0;
  IntMat m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || Index(j[i].size()) != cols)
      throw Error("ParseError", "ragged matrix rows");
    for (Index c = 0; c < cols; ++c) m(i, c) = json_to_int(j[i][c]);
  }
  return m;
}

Json vec_to_json(const IntVec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(int_to_json(v(i)));
  return out;
}

Json mat_to_json(const IntMat& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m(i, c)));
    out.push_back(row);
  }
  return out;
}

Block json_to_block(const Json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw Error("ParseError", "block document needs a \"kind\" field");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "finite_dim") return make_finite_dim_block(json_to_vec(j.at("k")));
  if (kind != "interval")
    throw Error("ParseError", "unknown block kind \"" + kind + "\"");
  return make_interval_block(json_to_vec(j.at("k")), json_to_int(j.at("n")),
                             json_to_vec(j.at("alpha")),
                             json_to_vec(j.at("beta")));
}

Json block_to_json(const Block& b) {
  Json j;
  if (b.kind == BlockKind::FiniteDim) {
    j["kind"] = "finite_dim";
    j["k"] = vec_to_json(b.k);
    return j;
  }
  j["kind"] = "interval";
  j["k"] = vec_to_json(b.k);
  j["n"] = int_to_json(b.n);
  j["alpha"] = vec_to_json(b.alpha);
  j["beta"] = vec_to_json(b.beta);
  return j;
}

Algebra json_to_algebra(const Json& j) {
  if (!j.is_object() || !j.contains("blocks"))
    throw Error("ParseError", "algebra document needs a \"blocks\" array");
  Algebra a;
  for (const Json& bj : j.at("blocks")) a.blocks.push_back(json_to_block(bj));
  return a;
}

Json algebra_to_json(const Algebra& a) {
  Json arr = Json::array();
  for (const Block& b : a.blocks) arr.push_back(block_to_json(b));
  return Json{{"blocks", arr}};
}

Diagram json_to_diagram(const Json& j) {
  if (!j.is_object()) throw Error("ParseError", "expected a diagram document");
  Int l1 = j.contains("lambda1") ? json_to_int(j.at("lambda1")) : Int(0);
  return diagram_validate(json_to_block(j.at("source")),
                          json_to_block(j.at("target")),
                          json_to_mat(j.at("lambda0")), l1);
}

Json diagram_to_json(const Diagram& d) {
  Json j;
  j["source"] = block_to_json(d.source);
  j["target"] = block_to_json(d.target);
  j["lambda0"] = mat_to_json(d.lambda0);
  j["lambda1"] = int_to_json(d.lambda1);
  return j;
}

Spectrum json_to_spectrum(const Json& j) {
  if (!j.is_object()) throw Error("ParseError", "expected a spectrum document");
  std::vector<Rat> interior;
  if (j.contains("interior"))
    for (const Json& x : j.at("interior")) interior.push_back(json_to_rat(x));
  return make_spectrum(json_to_block(j.at("block")), json_to_vec(j.at("base")),
                       std::move(interior));
}

Json spectrum_to_json(const Spectrum& s) {
  Json j;
  j["block"] = block_to_json(s.block);
  j["base"] = vec_to_json(s.base);
  Json interior = Json::array();
  for (const Rat& x : s.interior) interior.push_back(rat_to_json(x));
  j["interior"] = interior;
  return j;
}

SpectralChart json_to_chart(const Json& j) {
  if (!j.is_object()) throw Error("ParseError", "expected a chart document");
  SpectralChart c;
  c.source = json_to_block(j.at("source"));
  c.target = json_to_block(j.at("target"));
  for (const Json& sj : j.at("base_fibers"))
    c.base_fibers.push_back(json_to_spectrum(sj));
  c.t_interior = json_to_vec(j.at("t"));
  for (const Json& pj : j.at("paths")) {
    std::vector<std::pair<Rat, Rat>> pts;
    for (const Json& bp : pj) {
      if (!bp.is_array() || bp.size() != 2)
        throw Error("ParseError", "path breakpoints are [x, y] pairs");
      pts.emplace_back(json_to_rat(bp[0]), json_to_rat(bp[1]));
    }
    c.paths.push_back(make_path(std::move(pts)));
  }
  return chart_validate(std::move(c));
}

Json chart_to_json(const SpectralChart& c) {
  Json j;
  j["source"] = block_to_json(c.source);
  j["target"] = block_to_json(c.target);
  Json fibers = Json::array();
  for (const Spectrum& s : c.base_fibers) fibers.push_back(spectrum_to_json(s));
  j["base_fibers"] = fibers;
  j["t"] = vec_to_json(c.t_interior);
  Json paths = Json::array();
  for (const PLPath& p : c.paths) {
    Json pj = Json::array();
    for (const auto& [x, y] : p.pts)
      pj.push_back(Json::array({rat_to_json(x), rat_to_json(y)}));
    paths.push_back(pj);
  }
  j["paths"] = paths;
  return j;
}

DistributionWitness json_to_witness(const Json& j) {
  if (!j.is_object()) throw Error("ParseError", "expected a witness document");
  DistributionWitness w;
  w.eta = json_to_rat(j.at("eta"));
  w.K = json_to_int(j.at("K"));
  w.L = json_to_int(j.at("L"));
  for (const Json& iv : j.at("intervals")) {
    if (!iv.is_array() || iv.size() != 2)
      throw Error("ParseError", "witness intervals are [a, b] pairs");
    w.intervals.emplace_back(json_to_int(iv[0]), json_to_int(iv[1]));
  }
  return w;
}

Json witness_to_json(const DistributionWitness& w) {
  Json j;
  j["eta"] = rat_to_json(w.eta);
  j["K"] = int_to_json(w.K);
  j["L"] = int_to_json(w.L);
  Json ivs = Json::array();
  for (const auto& [a, b] : w.intervals)
    ivs.push_back(Json::array({int_to_json(a), int_to_json(b)}));
  j["intervals"] = ivs;
  return j;
}

FinDimDecomposition json_to_decomposition(const Json& j) {
  if (!j.is_object())
    throw Error("ParseError", "expected a decomposition document");
  FinDimDecomposition dec;
  dec.psi_F1_unit = json_to_vec(j.at("psi_f1_unit"));
  dec.psi_int_unit = json_to_vec(j.at("psi_int_unit"));
  dec.psi_r_diagram = json_to_diagram(j.at("psi_r_diagram"));
  for (const Json& g : j.at("g_vectors")) dec.g_vectors.push_back(json_to_vec(g));
  return dec;
}

Json ktheory_to_json(const KTheoryData& kt) {
  Json j;
  j["k0_rank"] = int_to_json(Int(kt.k0_rank));
  Json basis = Json::array();
  for (Index i = 0; i < kt.k0_basis.rows(); ++i) {
    Json row = Json::array();
    for (Index c = 0; c < kt.k0_basis.cols(); ++c)
      row.push_back(int_to_json(kt.k0_basis(i, c)));
    basis.push_back(row);
  }
  j["k0_basis"] = basis;
  j["k1"] = kt.k1.kind == K1Kind::FreeZ ? std::string("Z")
                                        : "Z/" + to_string(kt.k1.order);
  j["unit"] = vec_to_json(kt.unit_class);
  return j;
}

Json verdict_to_json(const LiftVerdict& v) {
  Json j;
  switch (v.status) {
    case LiftStatus::Liftable: j["status"] = "liftable"; break;
    case LiftStatus::NotLiftable: j["status"] = "not-liftable"; break;
    case LiftStatus::Unknown: j["status"] = "unknown"; break;
  }
  j["criterion"] = v.criterion;
  Json rows = Json::array();
  for (const IntVec& r : v.witness_rows) rows.push_back(vec_to_json(r));
  j["witness_rows"] = rows;
  if (!v.reason.empty()) j["reason"] = v.reason;
  j["unital_scale_ok"] = v.unital_scale_ok;
  return j;
}

Json certificate_to_json(const DecompositionCertificate& c) {
  Json j;
  auto ivs = [](const std::vector<RatInterval>& v) {
    Json arr = Json::array();
    for (const RatInterval& iv : v)
      arr.push_back(Json::array({rat_to_json(iv.lo), rat_to_json(iv.hi)}));
    return arr;
  };
  auto vecs = [](const std::vector<IntVec>& v) {
    Json arr = Json::array();
    for (const IntVec& x : v) arr.push_back(vec_to_json(x));
    return arr;
  };
  j["V"] = ivs(c.V);
  j["W"] = ivs(c.W);
  j["P"] = vecs(c.P);
  j["Q"] = vecs(c.Q);
  j["R"] = vec_to_json(c.R);
  j["q"] = vec_to_json(c.q);
  j["nu_unit"] = vec_to_json(c.nu_unit);
  j["rho_unit"] = vec_to_json(c.rho_unit);
  Json checks = Json::array();
  for (const NamedCheck& ch : c.checks) {
    Json cj;
    cj["name"] = ch.name;
    cj["ok"] = ch.ok;
    cj["margin"] = vec_to_json(ch.margin);
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("ParseError", "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("ParseError", std::string("invalid JSON in ") + path + ": " +
                                  e.what());
  }
  return j;
}

}  // namespace etkk
