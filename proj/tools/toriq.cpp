// toriq: mod-2 quadruple-point calculus for systems of embedded tori.
//
// Exit codes: 0 success, 1 domain failure (valid input outside the domain of
// the computation, or an internal inconsistency), 2 input failure (malformed
// files, matrices, tokens, or command lines).
#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "tori/cubical.hpp"
#include "tori/embedding.hpp"
#include "tori/errors.hpp"
#include "tori/fixtures.hpp"
#include "tori/io.hpp"
#include "tori/mcg.hpp"
#include "tori/moves.hpp"

namespace {

using namespace tori;

std::optional<int> margin_of(const CLI::Option* opt, const int& value) {
  if (opt != nullptr && opt->count() > 0) return value;
  return std::nullopt;
}

void print_class(std::ostream& out, const char* label, embedding::H1Class h) {
  out << label << '=' << embedding::name_of(h) << '('
      << embedding::meridian_bit(h) << ',' << embedding::longitude_bit(h)
      << ')';
}

void print_invariant(const embedding::SystemQ& sq) {
  for (std::size_t i = 0; i < sq.components.size(); ++i) {
    std::cout << "component" << i << ": ";
    print_class(std::cout, "c", sq.components[i].c);
    std::cout << ' ';
    print_class(std::cout, "n", sq.components[i].n);
    std::cout << " Q=" << sq.components[i].q << '\n';
  }
  std::cout << "total Q=" << sq.total << '\n';
}

void verify_oracles(const io::EmbeddingFile& file,
                    const embedding::SystemEmbedding& system,
                    const embedding::SystemQ& sq) {
  std::size_t checked = 0;
  for (std::size_t i = 0; i < file.components.size(); ++i) {
    if (file.components[i].core.empty()) continue;
    const fixtures::LatticePath core =
        fixtures::LatticePath::make(file.components[i].core, true);
    const embedding::MarkedTorusEmbedding& emb = system.components[i];
    const embedding::ComponentQ& cq = sq.components[i];
    for (const embedding::H1Class h :
         {embedding::H1Class::e, embedding::H1Class::ee,
          embedding::H1Class::eee}) {
      const cubical::EdgeCycle cycle = embedding::realize_class(
          emb, embedding::meridian_bit(h), embedding::longitude_bit(h));
      const bool disc_even = fixtures::meridian_disc_crossings(cycle, core) == 0;
      const bool link_even = fixtures::linking_parity(cycle, core) == 0;
      if ((h == cq.c) != disc_even || (h == cq.n) != link_even) {
        throw InternalError(
            "oracle disagrees with the kernel solver on component " +
            std::to_string(i) + " class " + embedding::name_of(h));
      }
    }
    ++checked;
  }
  std::cout << "oracle: checked " << checked << " of "
            << file.components.size() << " components, all consistent\n";
}

io::ComponentFile to_component_file(const embedding::MarkedTorusEmbedding& emb,
                                    std::vector<cubical::Voxel> core) {
  io::ComponentFile out;
  out.voxels = emb.solid.voxels;
  out.m = emb.m_cycle.points;
  out.l = emb.l_cycle.points;
  out.box_margin = emb.box_margin;
  out.core = std::move(core);
  return out;
}

long long parse_count(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const long long value = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw InputError(std::string(what) + " must be an integer, got '" + text +
                     "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mod-2 quadruple-point calculus for systems of embedded tori"};
  app.require_subcommand(1);

  // ---- q-invariant ------------------------------------------------------
  auto* q_cmd = app.add_subcommand(
      "q-invariant", "Class data and invariant of an embedding file");
  std::string q_file;
  int q_margin = 0;
  bool q_oracle = false;
  q_cmd->add_option("file", q_file, "embedding JSON file")->required();
  auto* q_margin_opt = q_cmd->add_option(
      "--box-margin", q_margin, "override every component's box margin");
  q_cmd->add_flag("--verify-oracle", q_oracle,
                  "cross-check components that carry a core path");
  q_cmd->callback([&] {
    const io::EmbeddingFile file = io::parse_embedding(io::read_file(q_file));
    const std::optional<int> margin = margin_of(q_margin_opt, q_margin);
    const embedding::SystemEmbedding system = io::to_system(file, margin);
    const embedding::SystemQ sq = embedding::q_system(system);
    print_invariant(sq);
    if (q_oracle) verify_oracles(file, system, sq);
  });

  // ---- predict ----------------------------------------------------------
  auto* predict_cmd = app.add_subcommand(
      "predict",
      "Parity of quadruple points in a generic homotopy between two "
      "embeddings of the same system");
  std::string predict_f, predict_g;
  int predict_margin = 0;
  predict_cmd->add_option("f", predict_f, "embedding JSON file")->required();
  predict_cmd->add_option("g", predict_g, "embedding JSON file")->required();
  auto* predict_margin_opt = predict_cmd->add_option(
      "--box-margin", predict_margin, "override every component's box margin");
  predict_cmd->callback([&] {
    const std::optional<int> margin =
        margin_of(predict_margin_opt, predict_margin);
    const io::EmbeddingFile file_f =
        io::parse_embedding(io::read_file(predict_f));
    const io::EmbeddingFile file_g =
        io::parse_embedding(io::read_file(predict_g));
    const embedding::SystemEmbedding sys_f = io::to_system(file_f, margin);
    const embedding::SystemEmbedding sys_g = io::to_system(file_g, margin);
    const int predicted = embedding::predict_q(sys_f, sys_g);
    const int total_f = embedding::q_system(sys_f).total;
    const int total_g = embedding::q_system(sys_g).total;
    std::cout << "f total Q=" << total_f << '\n';
    std::cout << "g total Q=" << total_g << '\n';
    std::cout << "predicted q=" << predicted << '\n';
  });

  // ---- mcg --------------------------------------------------------------
  auto* mcg_cmd =
      app.add_subcommand("mcg", "Mapping-class parity calculus on the torus");
  mcg_cmd->require_subcommand(1);

  auto* check_cmd = mcg_cmd->add_subcommand(
      "check", "Is this class regularly homotopic to the inclusion?");
  std::string check_matrix;
  check_cmd->add_option("matrix", check_matrix, "matrix \"a b c d\"")
      ->required();
  check_cmd->callback([&] {
    const mcg::MappingClass m = io::parse_matrix(check_matrix);
    std::cout << "reg-homotopic-to-inclusion: "
              << (mcg::reg_homotopic_to_inclusion(m) ? "true" : "false")
              << '\n';
  });

  auto* parity_cmd = mcg_cmd->add_subcommand(
      "parity",
      "Quadruple-point parity between two regularly homotopic classes "
      "(one argument: from the inclusion)");
  std::string parity_first, parity_second;
  parity_cmd->add_option("f", parity_first, "matrix \"a b c d\"")->required();
  auto* parity_second_opt =
      parity_cmd->add_option("g", parity_second, "matrix \"a b c d\"");
  parity_cmd->callback([&] {
    const bool two = parity_second_opt->count() > 0;
    const mcg::MappingClass f =
        two ? io::parse_matrix(parity_first) : mcg::MappingClass{};
    const mcg::MappingClass g =
        io::parse_matrix(two ? parity_second : parity_first);
    const int q = mcg::q_parity(f, g);
    std::cout << "q=" << q << '\n';
  });

  auto* decompose_cmd = mcg_cmd->add_subcommand(
      "decompose",
      "Write the class as a word in the double shears, signs, and swap");
  std::string decompose_matrix;
  decompose_cmd->add_option("matrix", decompose_matrix, "matrix \"a b c d\"")
      ->required();
  decompose_cmd->callback([&] {
    const mcg::MappingClass m = io::parse_matrix(decompose_matrix);
    const mcg::ParityClass p = mcg::tau(m);
    io::ParsedWord parsed;
    if (p == mcg::ParityClass::antidiagonal()) {
      parsed.swap_first = true;
      parsed.word = mcg::decompose_tau_u(
          mcg::multiply(m, mcg::MappingClass::make(0, 1, 1, 0)));
    } else {
      parsed.word = mcg::decompose_tau_u(m);
    }
    if (!(io::compose_word(parsed) == m)) {
      throw InternalError("decomposition failed verification");
    }
    std::cout << "word: " << io::word_to_string(parsed) << '\n';
    std::cout << "length: "
              << parsed.word.size() + (parsed.swap_first ? 1 : 0) << '\n';
    std::cout << "verified: true\n";
  });

  // ---- moves ------------------------------------------------------------
  auto* moves_cmd =
      app.add_subcommand("moves", "Move sequences and their parity");
  moves_cmd->require_subcommand(1);

  auto* eval_cmd =
      moves_cmd->add_subcommand("eval", "Parity of a move file");
  std::string eval_file;
  eval_cmd->add_option("file", eval_file, "move file, one token per line")
      ->required();
  eval_cmd->callback([&] {
    const moves::MoveSequence seq = io::parse_moves(io::read_file(eval_file));
    std::cout << "moves: " << seq.size() << '\n';
    std::cout << "q=" << moves::q_of(seq) << '\n';
  });

  auto* build_cmd = moves_cmd->add_subcommand(
      "build", "Emit a named move sequence as a move file");
  std::string build_name;
  std::vector<std::string> build_params;
  build_cmd->add_option("name", build_name,
                        "double-meridian-twist, double-longitude-twist, "
                        "rotate-pi, reflect-xy, swap-ml, morse-sweep, word")
      ->required();
  build_cmd->add_option("params", build_params,
                        "morse-sweep: min saddle max chi; word: tokens");
  build_cmd->callback([&] {
    moves::MoveSequence seq;
    const std::size_t arity = build_params.size();
    if (build_name == "morse-sweep") {
      if (arity != 4) {
        throw InputError("morse-sweep needs: min saddle max chi");
      }
      seq = moves::morse_sweep(moves::MorseData::make(
          parse_count(build_params[0], "min"),
          parse_count(build_params[1], "saddle"),
          parse_count(build_params[2], "max"),
          parse_count(build_params[3], "chi")));
    } else if (build_name == "word") {
      const io::ParsedWord parsed = io::parse_word(build_params);
      seq = moves::word_to_moves(parsed.word, parsed.swap_first);
    } else {
      if (arity != 0) {
        throw InputError("builder '" + build_name + "' takes no parameters");
      }
      if (build_name == "double-meridian-twist") {
        seq = moves::double_meridian_twist();
      } else if (build_name == "double-longitude-twist") {
        seq = moves::double_longitude_twist();
      } else if (build_name == "rotate-pi") {
        seq = moves::rotate_pi();
      } else if (build_name == "reflect-xy") {
        seq = moves::reflect_xy();
      } else if (build_name == "swap-ml") {
        seq = moves::swap_ml();
      } else {
        throw InputError("unknown builder '" + build_name + "'");
      }
    }
    std::cout << io::serialize_moves(seq);
  });

  // ---- fixture ----------------------------------------------------------
  auto* fixture_cmd = app.add_subcommand(
      "fixture", "Emit a canonical embedding as a JSON file");
  std::string fixture_name;
  long long fixture_param = -1;
  std::string fixture_out;
  int fixture_margin = 0;
  fixture_cmd->add_option("name", fixture_name,
                          "donut, rect-tube, trefoil-tube, drilled-cube")
      ->required();
  fixture_cmd->add_option(
      "param", fixture_param,
      "donut: outer (default 3); trefoil-tube: framing parity (default 0); "
      "drilled-cube: side (default 4)");
  fixture_cmd->add_option("--out", fixture_out, "write here instead of stdout");
  auto* fixture_margin_opt = fixture_cmd->add_option(
      "--box-margin", fixture_margin, "box margin stored in the file");
  fixture_cmd->callback([&] {
    const std::optional<int> margin =
        margin_of(fixture_margin_opt, fixture_margin);
    const int margin_value = margin.value_or(2);
    const bool has_param = fixture_param >= 0;
    io::EmbeddingFile file;
    if (fixture_name == "donut") {
      const int outer = has_param ? static_cast<int>(fixture_param) : 3;
      file.components.push_back(
          to_component_file(fixtures::donut(outer, margin_value), {}));
    } else if (fixture_name == "rect-tube") {
      if (has_param) throw InputError("rect-tube takes no parameter");
      const fixtures::LatticePath core = fixtures::rect_ring_path();
      file.components.push_back(
          to_component_file(fixtures::tube(core, margin_value), core.points));
    } else if (fixture_name == "trefoil-tube") {
      const int framing = has_param ? static_cast<int>(fixture_param) : 0;
      file.components.push_back(to_component_file(
          fixtures::trefoil_tube(framing, margin_value),
          fixtures::trefoil_path().points));
    } else if (fixture_name == "drilled-cube") {
      const int side = has_param ? static_cast<int>(fixture_param) : 4;
      file.components.push_back(
          to_component_file(fixtures::drilled_cube(side, margin_value), {}));
    } else {
      throw InputError("unknown fixture '" + fixture_name + "'");
    }
    const std::string text = io::serialize_embedding(file);
    if (fixture_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(fixture_out, std::ios::binary);
      if (!out || !(out << text)) {
        throw InputError("cannot write file: " + fixture_out);
      }
    }
  });

  // ---- homology ---------------------------------------------------------
  auto* homology_cmd = app.add_subcommand(
      "homology",
      "Betti numbers of each component's solid and boundary surface");
  std::string homology_file;
  homology_cmd->add_option("file", homology_file, "embedding JSON file")
      ->required();
  homology_cmd->callback([&] {
    const io::EmbeddingFile file =
        io::parse_embedding(io::read_file(homology_file));
    for (std::size_t i = 0; i < file.components.size(); ++i) {
      const cubical::VoxelSolid solid =
          cubical::VoxelSolid::from_voxels(file.components[i].voxels);
      const auto solid_b = cubical::betti_numbers(cubical::build_complex(solid));
      const cubical::SurfaceComplex surface = cubical::boundary_surface(solid);
      const auto surf_b = cubical::betti_numbers(surface.complex);
      std::cout << "component" << i << ": solid b=(" << solid_b[0] << ','
                << solid_b[1] << ',' << solid_b[2] << ") surface b=("
                << surf_b[0] << ',' << surf_b[1] << ',' << surf_b[2]
                << ") chi=" << cubical::euler_characteristic(surface.complex)
                << '\n';
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: Unexpected: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
