// Command-line front end.  Every subcommand prints a single JSON object on
// stdout and is deterministic for fixed inputs.
//
// Exit codes: 0 success, 1 domain error (bad symbol/index for the family,
// unsatisfiable request), 2 usage or word-syntax error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "braidcrys/bieberbach.hpp"
#include "braidcrys/jsonio.hpp"
#include "braidcrys/oracle.hpp"
#include "braidcrys/torsion.hpp"
#include "braidcrys/words.hpp"

namespace bc = braidcrys;

namespace {

struct CommonOpts {
  std::string family = "vb";
  int n = 3;
  bool json_flag = false;  // output is always JSON; accepted for scripts
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--family", opts.family, "family: vb, vt, plbext or kb3")
      ->check(CLI::IsMember({"vb", "vt", "plbext", "kb3"}));
  cmd->add_option("--n", opts.n, "number of strands");
  cmd->add_flag("--json", opts.json_flag, "emit JSON (the default)");
}

bc::CrystalGroupPtr group_of(const CommonOpts& opts) {
  return bc::make_family(bc::family_from_string(opts.family), opts.n);
}

void emit(const bc::json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic in crystallographic quotients of virtual "
               "braid-like groups"};
  app.require_subcommand(1);

  CommonOpts eval_opts;
  std::string eval_word;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a generator word");
  add_common(eval_cmd, eval_opts);
  eval_cmd->add_option("word", eval_word, "generator word")->required();

  CommonOpts order_opts;
  std::string order_word;
  CLI::App* order_cmd =
      app.add_subcommand("order", "order of a word's image, with orbit sums");
  add_common(order_cmd, order_opts);
  order_cmd->add_option("word", order_word, "generator word")->required();

  CommonOpts conj_opts;
  std::string conj_w1, conj_w2;
  CLI::App* conj_cmd = app.add_subcommand("conj", "decide conjugacy of two words");
  add_common(conj_cmd, conj_opts);
  conj_cmd->add_option("word1", conj_w1, "first word")->required();
  conj_cmd->add_option("word2", conj_w2, "second word")->required();

  CommonOpts nf_opts;
  std::string nf_word;
  CLI::App* nf_cmd = app.add_subcommand(
      "normal-form", "conjugacy normal form (unsigned families: vb, kb3)");
  add_common(nf_cmd, nf_opts);
  nf_cmd->add_option("word", nf_word, "generator word")->required();

  CommonOpts tm_opts;
  std::string tm_type;
  std::optional<unsigned long long> tm_seed;
  CLI::App* tm_cmd = app.add_subcommand(
      "torsion-make", "element of prescribed finite order from a cycle type");
  add_common(tm_cmd, tm_opts);
  tm_cmd->add_option("--cycle-type", tm_type, "comma-separated parts, e.g. 2,3")
      ->required();
  tm_cmd->add_option("--seed", tm_seed, "randomize the translation part");

  CommonOpts vc_opts;
  int vc_k = 1;
  CLI::App* vc_cmd = app.add_subcommand(
      "vc-realize", "realize Z_n x| Z with B A B^-1 = A^k (vb or vt)");
  add_common(vc_cmd, vc_opts);
  vc_cmd->add_option("--k", vc_k, "twist exponent, gcd(n, k) = 1")->required();

  int bb_n = 2;
  CLI::App* bb_cmd = app.add_subcommand(
      "bieberbach", "torsion-free subgroup of the vb quotient and its manifold");
  bb_cmd->add_option("--n", bb_n, "number of strands")->required();

  CommonOpts rel_opts;
  int rel_arrow = 1;
  CLI::App* rel_cmd =
      app.add_subcommand("relcheck", "do all instances of a quotient-arrow "
                                     "relator vanish in the family quotient");
  add_common(rel_cmd, rel_opts);
  rel_cmd->add_option("--arrow", rel_arrow, "relator family 1..5")->required();

  CommonOpts cc_opts;
  unsigned long long cc_cap = 3628800ULL;
  CLI::App* cc_cmd =
      app.add_subcommand("crystcheck", "is the quotient crystallographic");
  add_common(cc_cmd, cc_opts);
  cc_cmd->add_option("--cap", cc_cap, "enumeration cap for the point group");

  CommonOpts or_opts;
  std::string or_op, or_word, or_word2;
  long long or_cap = 64, or_radius = 2;
  CLI::App* or_cmd = app.add_subcommand(
      "oracle", "brute-force verifiers: order, conj, relations, faithful");
  add_common(or_cmd, or_opts);
  or_cmd->add_option("--op", or_op, "order | conj | relations | faithful")
      ->required()
      ->check(CLI::IsMember({"order", "conj", "relations", "faithful"}));
  or_cmd->add_option("--word", or_word, "input word (order, conj)");
  or_cmd->add_option("--word2", or_word2, "second word (conj)");
  or_cmd->add_option("--cap", or_cap, "power cap for order");
  or_cmd->add_option("--radius", or_radius, "conjugator radius for conj");

  try {
    app.parse(argc, argv);

    if (*eval_cmd) {
      bc::Element e = bc::evaluate(eval_word, group_of(eval_opts));
      bc::json out = bc::element_to_json(e);
      out["order"] = bc::order_to_json(bc::element_order(e));
      emit(out);
    } else if (*order_cmd) {
      bc::Element e = bc::evaluate(order_word, group_of(order_opts));
      emit(bc::certificate_to_json(bc::torsion_certificate(e)));
    } else if (*conj_cmd) {
      bc::CrystalGroupPtr g = group_of(conj_opts);
      bc::Element e1 = bc::evaluate(conj_w1, g);
      bc::Element e2 = bc::evaluate(conj_w2, g);
      auto witness = bc::conjugacy_test(e1, e2);
      bc::json out{{"conjugate", witness.has_value()}};
      if (witness) {
        out["witness"] = bc::element_to_json(*witness);
        out["witness_checks"] = bc::mul(bc::mul(*witness, e1), bc::inv(*witness)) == e2;
      }
      emit(out);
    } else if (*nf_cmd) {
      bc::CrystalGroupPtr g = group_of(nf_opts);
      bc::Element e = bc::evaluate(nf_word, g);
      bc::Element nf = bc::conjugacy_normal_form(e);
      emit(bc::json{{"normal_form", bc::element_to_json(nf)},
                    {"canonical", bc::format_element(nf)}});
    } else if (*tm_cmd) {
      std::vector<int> parts;
      size_t pos = 0;
      while (pos < tm_type.size()) {
        size_t comma = tm_type.find(',', pos);
        if (comma == std::string::npos) comma = tm_type.size();
        parts.push_back(std::stoi(tm_type.substr(pos, comma - pos)));
        pos = comma + 1;
      }
      bc::CrystalGroupPtr g = group_of(tm_opts);
      bc::Element e = bc::make_torsion_element(g, parts, tm_seed);
      bc::json out = bc::element_to_json(e);
      out["order"] = bc::order_to_json(bc::element_order(e));
      emit(out);
    } else if (*vc_cmd) {
      bc::CrystalGroupPtr g = group_of(vc_opts);
      bc::VCRealization vc = bc::realize_virtually_cyclic(g, vc_k);
      emit(bc::json{{"n", vc.n},
                    {"k", vc.k},
                    {"A", bc::element_to_json(vc.a)},
                    {"B", bc::element_to_json(vc.b)},
                    {"transcript", vc.transcript}});
    } else if (*bb_cmd) {
      bc::BieberbachSubgroup sub = bc::build_gn_tilde(bb_n);
      emit(bc::manifold_report_to_json(bc::manifold_report(sub)));
    } else if (*rel_cmd) {
      bc::CrystalGroupPtr g = group_of(rel_opts);
      bool trivial = bc::relator_check(g, rel_arrow);
      bc::json out{{"trivial", trivial}};
      if (!trivial) {
        bc::json images = bc::json::array();
        for (const bc::GenWord& w : bc::relator_instances(rel_arrow, g->n()))
          images.push_back(bc::format_element(bc::evaluate_word(g, w)));
        out["images"] = images;
      }
      emit(out);
    } else if (*cc_cmd) {
      bc::CrystalGroupPtr g = group_of(cc_opts);
      bc::CrystCheck check = bc::is_crystallographic(*g, cc_cap);
      bc::json out{{"crystallographic", check.crystallographic},
                   {"dimension", g->rank()},
                   {"holonomy_order", g->w_count()}};
      if (check.kernel_witness) {
        if (g->point_kind() == bc::PointKind::Perms)
          out["kernel_certificate"] =
              bc::Perm(check.kernel_witness->data).cycle_string();
        else
          out["kernel_certificate"] = check.kernel_witness->data;
      }
      emit(out);
    } else if (*or_cmd) {
      bc::CrystalGroupPtr g = group_of(or_opts);
      if (or_op == "order") {
        bc::Element e = bc::evaluate(or_word, g);
        auto ord = bc::oracle::brute_order(e, or_cap);
        emit(bc::json{{"op", "order"},
                      {"cap", or_cap},
                      {"order", ord ? bc::json(*ord) : bc::json("unknown")}});
      } else if (or_op == "conj") {
        bc::Element e1 = bc::evaluate(or_word, g);
        bc::Element e2 = bc::evaluate(or_word2, g);
        auto w = bc::oracle::brute_conjugacy(e1, e2, or_radius);
        bc::json out{{"op", "conj"}, {"radius", or_radius}, {"found", w.has_value()}};
        if (w) {
          out["witness_x"] = w->x;
          out["witness_c"] = w->c;
        }
        emit(out);
      } else if (or_op == "relations") {
        auto results =
            bc::oracle::relation_suite(bc::family_from_string(or_opts.family), or_opts.n);
        int failed = 0;
        bc::json list = bc::json::array();
        for (const auto& r : results) {
          if (!r.pass) ++failed;
          list.push_back(bc::json{{"relation", r.name}, {"pass", r.pass}});
        }
        emit(bc::json{{"op", "relations"},
                      {"total", results.size()},
                      {"failed", failed},
                      {"results", list}});
      } else {  // faithful
        auto kernel = bc::oracle::faithfulness_enum(*g);
        bc::json list = bc::json::array();
        for (const auto& w : kernel) {
          if (g->point_kind() == bc::PointKind::Perms)
            list.push_back(bc::Perm(w.data).cycle_string());
          else
            list.push_back(w.data);
        }
        emit(bc::json{{"op", "faithful"},
                      {"kernel_size", kernel.size()},
                      {"kernel", list}});
      }
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const bc::SyntaxError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {  // malformed numeric input
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const bc::DomainError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
