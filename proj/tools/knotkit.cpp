// Copyright 2026 The knotkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// knotkit: command-line front end.
//
// Words, polynomials and planar diagrams are given inline or as @path.
// Exit status: 0 success, 1 domain error, 2 parse or usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "knotkit/braid.hpp"
#include "knotkit/error.hpp"
#include "knotkit/homfly.hpp"
#include "knotkit/laurent.hpp"
#include "knotkit/plumb.hpp"
#include "knotkit/rampichini.hpp"
#include "knotkit/seifert.hpp"

namespace {

using namespace knotkit;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string load(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return read_file(arg.substr(1));
  return arg;
}

std::string trimmed(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  const auto last = s.find_last_not_of(" \t\r\n");
  return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
}

// A word with parentheses is read as a band word and expanded.
ArtinWord load_artin(const std::string& arg) {
  const std::string text = trimmed(load(arg));
  if (text.find('(') != std::string::npos) return bkl_to_artin(parse_bkl(text));
  return parse_artin(text);
}

Merger load_merger(const std::string& arg, int l1, int l2) {
  const std::string text = trimmed(load(arg));
  if (!text.empty() && text.front() == 'f') return parse_merger(text);
  return parse_merger("f=" + text + " sizes=(" + std::to_string(l1) + "," + std::to_string(l2) + ")");
}

hecke::Exec exec_of(bool serial) { return serial ? hecke::Exec::serial : hecke::Exec::parallel; }

void print_survey_text(const std::vector<SurveyRow>& rows) {
  std::cout << std::left << std::setw(4) << "n" << std::setw(8) << "length" << std::setw(7)
            << "genus" << std::setw(7) << "bound" << "verdict\n";
  for (const auto& row : rows) {
    std::cout << std::setw(4) << row.n << std::setw(8) << row.cable_word_length << std::setw(7)
              << row.genus << std::setw(7) << row.gc_lower_bound
              << (row.error.empty() ? to_string(row.verdict) : "error: " + row.error) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braids, HOMFLY-PT polynomials, Rampichini diagrams and Seifert surfaces"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  int p = 0, q = 0, k = 0, l = 0;
  std::string word;
  bool serial = false;
  bool oracle = false;

  auto* torus = app.add_subcommand("torus-braid", "Braid word of the torus knot T(p,q)");
  torus->add_option("p", p)->required();
  torus->add_option("q", q)->required();

  auto* cable = app.add_subcommand("cable", "Braid word of the (k,l)-cable of T(p,q)");
  cable->add_option("p", p)->required();
  cable->add_option("q", q)->required();
  cable->add_option("k", k)->required();
  cable->add_option("l", l)->required();

  auto* writhe_cmd = app.add_subcommand("writhe", "Exponent sum of an Artin or band word");
  writhe_cmd->add_option("word", word)->required();

  auto* homfly = app.add_subcommand("homfly", "HOMFLY-PT polynomial of a braid closure");
  homfly->add_option("word", word)->required();
  homfly->add_flag("--serial", serial, "Use the serial kernels");
  homfly->add_flag("--oracle", oracle, "Use the skein-tree reference");

  auto* bound = app.add_subcommand("gc-bound", "Half the top z-degree of the HOMFLY-PT polynomial");
  bound->add_option("word", word)->required();
  bound->add_flag("--serial", serial, "Use the serial kernels");

  int max_n = 0;
  std::string format = "tsv";
  auto* survey_cmd = app.add_subcommand("survey", "Genus against the z-degree bound for (2,1)-cables of T(2,2n+1)");
  survey_cmd->add_option("max_n", max_n)->required()->check(CLI::PositiveNumber);
  survey_cmd->add_option("--format", format)->check(CLI::IsMember({"tsv", "text"}));
  survey_cmd->add_flag("--serial", serial, "Use the serial kernels");

  auto* expand = app.add_subcommand("bkl-expand", "Rewrite a band word in Artin generators");
  expand->add_option("word", word)->required();

  std::string b1, b2, merger_text;
  int n1 = 0, n2 = 0;
  auto* plumb_word = app.add_subcommand("plumb-word", "Braided Stallings plumbing of two band words");
  plumb_word->add_option("--b1", b1)->required();
  plumb_word->add_option("--n1", n1)->required();
  plumb_word->add_option("--b2", b2)->required();
  plumb_word->add_option("--n2", n2)->required();
  plumb_word->add_option("--merger", merger_text, "f=... sizes=(l1,l2), or the images alone")
      ->required();

  int l1 = 0, l2 = 0;
  auto* mergers = app.add_subcommand("mergers", "List all mergers of size (l1,l2)");
  mergers->add_option("l1", l1)->required()->check(CLI::NonNegativeNumber);
  mergers->add_option("l2", l2)->required()->check(CLI::NonNegativeNumber);

  std::vector<std::string> files;
  std::size_t cut = 0;
  auto* ramp = app.add_subcommand("ramp", "Rampichini diagrams");
  ramp->require_subcommand(1);
  auto* ramp_validate = ramp->add_subcommand("validate", "Check a diagram file");
  ramp_validate->add_option("file", files)->required()->expected(1);
  auto* ramp_extract = ramp->add_subcommand("extract", "Band word at a cut");
  ramp_extract->add_option("file", files)->required()->expected(1);
  ramp_extract->add_option("--cut", cut);
  auto* ramp_translate = ramp->add_subcommand("translate", "Move the cut past k events");
  ramp_translate->add_option("file", files)->required()->expected(1);
  ramp_translate->add_option("--cut", cut);
  auto* ramp_plumb = ramp->add_subcommand("plumb", "Glue two diagrams along a merger");
  ramp_plumb->add_option("files", files)->required()->expected(2);
  ramp_plumb->add_option("--merger", merger_text);

  std::string pd;
  auto* seifert = app.add_subcommand("seifert", "Seifert's algorithm on a PD code");
  seifert->require_subcommand(1);
  auto* circles_cmd = seifert->add_subcommand("circles", "Seifert circles");
  circles_cmd->add_option("pd", pd)->required();
  auto* genus_cmd = seifert->add_subcommand("genus", "Genus of the canonical surface");
  genus_cmd->add_option("pd", pd)->required();

  std::uint32_t seed = 0;
  auto* arcpres = app.add_subcommand("arcpres", "Guide graph, unknot smoothing and page labels");
  arcpres->add_option("pd", pd)->required();
  arcpres->add_option("--seed", seed, "Search order for the smoothing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*torus) {
      std::cout << format_artin(torus_knot_braid_word(p, q)) << '\n';
    } else if (*cable) {
      std::cout << format_artin(cable_word(torus_knot_braid_word(p, q), k, l)) << '\n';
    } else if (*writhe_cmd) {
      const std::string text = trimmed(load(word));
      std::cout << (text.find('(') != std::string::npos ? writhe(parse_bkl(text))
                                                         : writhe(parse_artin(text)))
                << '\n';
    } else if (*homfly) {
      const ArtinWord w = load_artin(word);
      std::cout << canonical_text(oracle ? homfly_oracle(w) : homfly_vz(w, exec_of(serial)))
                << '\n';
    } else if (*bound) {
      std::cout << gc_lower_bound(load_artin(word), exec_of(serial)) << '\n';
    } else if (*survey_cmd) {
      const auto rows = survey(max_n, exec_of(serial));
      if (format == "text") {
        print_survey_text(rows);
      } else {
        for (const auto& row : rows) std::cout << format_survey_row(row) << '\n';
      }
      for (const auto& row : rows) {
        if (!row.error.empty()) return 1;
      }
    } else if (*expand) {
      std::cout << format_artin(bkl_to_artin(parse_bkl(trimmed(load(word))))) << '\n';
    } else if (*plumb_word) {
      const BklWord w1(parse_bkl(trimmed(load(b1))).letters(), n1);
      const BklWord w2(parse_bkl(trimmed(load(b2))).letters(), n2);
      const Merger f = load_merger(merger_text, static_cast<int>(w1.size()),
                                   static_cast<int>(w2.size()));
      std::cout << format_bkl(plumb_words(w1, w2, f)) << '\n';
    } else if (*mergers) {
      for (const auto& f : enumerate_mergers(l1, l2)) std::cout << format_merger(f) << '\n';
    } else if (*ramp) {
      const RampichiniDiagram r = parse_diagram(read_file(files.at(0)));
      if (*ramp_validate) {
        const auto check = validate(r);
        std::cout << (check.valid ? "valid" : "invalid") << '\n';
        for (const auto& v : check.violations) {
          std::cout << v.rule << '\t' << (v.event ? std::to_string(*v.event) : "-") << '\t'
                    << v.message << '\n';
        }
        return check.valid ? 0 : 1;
      }
      if (*ramp_extract) {
        std::cout << format_bkl(extract_word(r, cut)) << '\n';
      } else if (*ramp_translate) {
        std::cout << format_diagram(translate(r, cut));
      } else if (*ramp_plumb) {
        const RampichiniDiagram r2 = parse_diagram(read_file(files.at(1)));
        const Merger f = merger_text.empty()
                             ? Merger::identity(static_cast<int>(r.start.size()),
                                                static_cast<int>(r2.start.size()))
                             : load_merger(merger_text, static_cast<int>(r.start.size()),
                                           static_cast<int>(r2.start.size()));
        const RampPlumbing glued = plumb_diagrams(r, r2, f);
        std::cout << "# seam " << glued.seam_cut << '\n' << format_diagram(glued.diagram);
      }
    } else if (*seifert) {
      const PlanarDiagram d = parse_pd(trimmed(load(pd)));
      if (*circles_cmd) {
        const auto s = seifert_circles(d);
        std::cout << s.count << '\n';
        for (const auto& circle : s.circles) {
          for (std::size_t i = 0; i < circle.size(); ++i) std::cout << (i ? " " : "") << circle[i];
          std::cout << '\n';
        }
      } else if (d.component_count() != 1) {
        std::cout << "betti " << seifert_betti(d) << '\n';
      } else {
        std::cout << canonical_genus(d) << '\n';
      }
    } else if (*arcpres) {
      SmoothOptions options;
      options.order_seed = seed;
      std::cout << format_report(arc_presentation(parse_pd(trimmed(load(pd))), options));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "parse error: number out of range\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
