// troplith command-line interface.
//
// Exit codes: 0 success, 1 other errors, 2 malformed input, 3 validation
// failure, 4 oracle incomplete (reason as JSON on stdout).

#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "troplith/io.hpp"
#include "troplith/plot.hpp"
#include "troplith/troplith.hpp"

namespace {

using troplith::io::json;
namespace tl = troplith;
namespace io = troplith::io;

constexpr int kExitOther = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitOracle = 4;

int exit_code_for(tl::ErrorCode code) {
  switch (code) {
    case tl::ErrorCode::Malformed: return kExitMalformed;
    case tl::ErrorCode::NotAComplex:
    case tl::ErrorCode::NotBalanced: return kExitInvalid;
    case tl::ErrorCode::OracleIncomplete: return kExitOracle;
    default: return kExitOther;
  }
}

json error_json(tl::ErrorCode code, const std::string& message) {
  return {{"error", std::string(tl::to_string(code))}, {"message", message}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  bool no_validate = false;
  std::string a, b, fn, map, point, vector, out, bbox, witness;
  long long factor = 1;
  int samples = 0;
  bool verify = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"troplith: exact tropical cycles on R^n"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--no-validate", o.no_validate, "skip the complex and balancing checks when loading cycles");

  std::function<int()> action;
  auto load = [&](const std::string& path) { return io::read_cycle(path, !o.no_validate); };
  auto cmd = [&](const char* name, const char* help, std::function<int()> run) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, run] { action = run; });
    return sub;
  };

  auto* validate = cmd("validate", "check that a cycle file is a balanced polyhedral complex", [&] {
    io::ValidationReport r = io::validate(io::cycle_document_from(io::read_json(o.a)));
    emit(io::to_json(r));
    return r.ok() ? 0 : kExitInvalid;
  });
  validate->add_option("cycle", o.a)->required();

  auto* add = cmd("add", "sum of two cycles", [&] {
    emit(io::to_json(tl::add(load(o.a), load(o.b))));
    return 0;
  });
  add->add_option("A", o.a)->required();
  add->add_option("B", o.b)->required();

  auto* scale = cmd("scale", "integer multiple of a cycle", [&] {
    emit(io::to_json(tl::scalar_multiple(load(o.a), tl::Integer(o.factor))));
    return 0;
  });
  scale->add_option("A", o.a)->required();
  scale->add_option("m", o.factor)->required();

  auto* product = cmd("product", "cartesian product of two cycles", [&] {
    emit(io::to_json(tl::product(load(o.a), load(o.b))));
    return 0;
  });
  product->add_option("A", o.a)->required();
  product->add_option("B", o.b)->required();

  auto* divisor = cmd("divisor", "divisor of a rational function on a cycle", [&] {
    emit(io::to_json(tl::divisor(io::function_from(io::read_json(o.fn)), load(o.a))));
    return 0;
  });
  divisor->add_option("--fn", o.fn, "function JSON")->required();
  divisor->add_option("X", o.a)->required();

  auto* push = cmd("pushforward", "push a cycle forward along an integral affine map", [&] {
    emit(io::to_json(tl::pushforward(io::map_from(io::read_json(o.map)), load(o.a))));
    return 0;
  });
  push->add_option("--map", o.map, "map JSON")->required();
  push->add_option("Z", o.a)->required();

  auto* inter = cmd("stable-intersect", "stable intersection of two cycles", [&] {
    emit(io::to_json(tl::stable_intersect(load(o.a), load(o.b))));
    return 0;
  });
  inter->add_option("A", o.a)->required();
  inter->add_option("B", o.b)->required();

  auto* degree = cmd("degree", "degree of the stable intersection of complementary cycles", [&] {
    emit({{"degree", io::to_json(tl::degree_pairing(load(o.a), load(o.b)))}});
    return 0;
  });
  degree->add_option("A", o.a)->required();
  degree->add_option("B", o.b)->required();

  auto* rec = cmd("recession", "recession fan cycle", [&] {
    emit(io::to_json(tl::recession_cycle(load(o.a))));
    return 0;
  });
  rec->add_option("X", o.a)->required();

  auto* star = cmd("star", "local fan at a point", [&] {
    emit(io::to_json(tl::star(load(o.a), io::parse_point(o.point))));
    return 0;
  });
  star->add_option("X", o.a)->required();
  star->add_option("--point", o.point, "comma separated rationals")->required();

  auto* lin = cmd("lineality", "lineality space of a fan cycle", [&] {
    auto V = tl::lineality_space(load(o.a));
    if (!V) {
      emit({{"lindim", "infinity"}});
      return 0;
    }
    emit({{"lindim", V->dim()}, {"basis", io::to_json_list(V->integer_basis())}});
    return 0;
  });
  lin->add_option("F", o.a)->required();

  auto* spl = cmd("spldim", "splitting dimension of a fan cycle", [&] {
    tl::SplitDim s = tl::spldim(load(o.a));
    if (!s.known()) {
      json j = error_json(tl::ErrorCode::OracleIncomplete, "splitting dimension undecided");
      j["bounds"] = io::to_json(s);
      emit(j);
      return kExitOracle;
    }
    emit(io::to_json(s));
    return 0;
  });
  spl->add_option("F", o.a)->required();

  auto* dec = cmd("decompose", "write a cycle as a sum of translated fan cycles", [&] {
    tl::TropicalCycle X = load(o.a);
    if (!o.witness.empty()) {
      tl::DecompositionWitness w = io::witness_from(io::read_json(o.witness));
      w.target = X;
      bool ok = w.verify();
      emit({{"verified", ok}});
      return ok ? 0 : kExitInvalid;
    }
    tl::DecompositionWitness w = tl::decompose(X);
    json j = io::to_json(w);
    if (o.verify) j["verified"] = w.verify();
    emit(j);
    return 0;
  });
  dec->add_option("X", o.a)->required();
  dec->add_flag("--verify", o.verify, "re-sum the witness and report the check");
  dec->add_option("--witness", o.witness, "verify this witness against X instead of decomposing");

  auto* equiv = cmd("equiv", "decide bounded equivalence through recession fans", [&] {
    emit(io::to_json(tl::recession_equiv(load(o.a), load(o.b), o.samples)));
    return 0;
  });
  equiv->add_option("A", o.a)->required();
  equiv->add_option("B", o.b)->required();
  equiv->add_option("--numerical-sample", o.samples, "test cycles to try for a degree-distinguishing witness")
      ->check(CLI::NonNegativeNumber);

  auto* inv = cmd("invert-divisor", "rational function whose divisor is a codimension-one fan cycle", [&] {
    emit(io::to_json(tl::invert_divisor(load(o.a))));
    return 0;
  });
  inv->add_option("D", o.a)->required();

  auto* plot = cmd("plot", "SVG of a planar curve", [&] {
    std::optional<tl::BoundingBox> box;
    if (!o.bbox.empty()) {
      tl::QVec b = io::parse_point(o.bbox);
      tl::require(b.size() == 4, tl::ErrorCode::InvalidArgument, "--bbox needs xmin,ymin,xmax,ymax");
      box = tl::BoundingBox{b[0], b[1], b[2], b[3]};
    }
    std::string svg = tl::plot_svg(load(o.a), box);
    if (o.out.empty() || o.out == "-")
      std::cout << svg;
    else
      io::write_text(o.out, svg);
    return 0;
  });
  plot->add_option("X", o.a)->required();
  plot->add_option("--out", o.out, "output file; stdout when omitted");
  plot->add_option("--bbox", o.bbox, "xmin,ymin,xmax,ymax");

  auto* tw = cmd("translation-witness", "bounded-equivalence witnesses from X to X + v", [&] {
    tl::TropicalCycle X = load(o.a);
    json list = json::array();
    for (const auto& w : tl::translation_witness(X, io::parse_point(o.vector))) {
      json j = io::to_json(w);
      j["verified"] = w.verify();
      list.push_back(j);
    }
    emit({{"witnesses", list}});
    return 0;
  });
  tw->add_option("X", o.a)->required();
  tw->add_option("--vector", o.vector, "comma separated rationals")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitOther;
  }

  try {
    return action();
  } catch (const tl::Error& e) {
    json j = error_json(e.code(), e.detail());
    if (e.code() == tl::ErrorCode::OracleIncomplete)
      emit(j);
    else
      std::cerr << j.dump(2) << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << error_json(tl::ErrorCode::Internal, e.what()).dump(2) << "\n";
    return kExitOther;
  }
}
