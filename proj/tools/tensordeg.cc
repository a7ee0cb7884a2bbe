// tensordeg: degrees, tensor squares and the verification sweep from the shell.
//
// Exit codes: 0 ok, 1 check failure, 2 parse/usage error, 3 resource limit,
// 4 I/O error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tensordeg/catalog.hpp"
#include "tensordeg/degrees.hpp"
#include "tensordeg/errors.hpp"
#include "tensordeg/fpgroup.hpp"
#include "tensordeg/tensor.hpp"
#include "tensordeg/verify.hpp"

namespace {

using namespace tdeg;

enum Exit { kOk = 0, kCheckFailed = 1, kParse = 2, kResource = 3, kIo = 4 };

std::vector<std::string> split_commas(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty())
      out.push_back(item);
  return out;
}

int cmd_degree(const std::string &spec, const std::string &kinds_arg, const std::string &format) {
  const FiniteGroup g = make(spec);
  const std::vector<std::string> kinds = split_commas(kinds_arg);
  for (const std::string &k : kinds)
    if (k != "tensor" && k != "exterior" && k != "comm")
      throw DomainError("unknown degree kind '" + k + "' (expected tensor, exterior, comm)");
  auto wanted = [&](const char *k) { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); };

  std::vector<std::pair<std::string, DegreeValue>> values;
  if (wanted("tensor") || wanted("exterior")) {
    const TensorSquare ts = tensor_square(g, limits_from_environment());
    if (wanted("tensor"))
      values.emplace_back("d_tensor", tensor_degree(ts));
    if (wanted("exterior"))
      values.emplace_back("d_ext", exterior_degree(ExteriorSquare(ts)));
  }
  if (wanted("comm"))
    values.emplace_back("d", commutativity_degree(g));

  if (format == "json") {
    nlohmann::json j = {{"group", g.name()}, {"order", g.order()}};
    for (const auto &[name, v] : values)
      j[name] = to_string(v);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto &[name, v] : values)
      std::cout << name << "(" << g.name() << ") = " << to_string(v) << "  (approx. "
                << approximate(v) << ")\n";
  }
  return kOk;
}

int cmd_tensor(const std::string &spec, const std::string &format) {
  const FiniteGroup g = make(spec);
  const TensorSquare ts = tensor_square(g, limits_from_environment());
  const ExteriorSquare es(ts);
  const nlohmann::json j = summary_json(ts, es);
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  for (const auto &[key, value] : j.items())
    std::cout << key << ": " << value.dump() << "\n";
  return kOk;
}

int cmd_verify(VerifyOptions options, const std::string &suites, const std::string &report_path,
               const std::string &format) {
  options.suites = split_commas(suites);
  options.limits = limits_from_environment(options.limits);

  // Fail on an unwritable report before spending time on the sweep.
  std::ofstream file;
  if (!report_path.empty()) {
    file.open(report_path);
    if (!file) {
      std::cerr << "error: cannot write report to " << report_path << "\n";
      return kIo;
    }
  }

  const ReportDocument doc = run_verification(options);
  std::string body;
  if (format == "json")
    body = doc.to_json().dump(2) + "\n";
  else if (format == "csv")
    body = doc.to_csv();
  else
    body = doc.to_text();

  if (file.is_open()) {
    file << body;
    file.close();
    if (!file) {
      std::cerr << "error: writing " << report_path << " failed\n";
      return kIo;
    }
    const ReportSummary s = doc.summary();
    std::cout << "holds " << s.holds << ", fails " << s.fails << ", not applicable "
              << s.not_applicable << ", skipped " << s.skipped << "\n";
  } else {
    std::cout << body;
  }
  return doc.summary().fails == 0 ? kOk : kCheckFailed;
}

// A subgroup word over the presentation's generators, reusing its parser.
Word parse_word(const std::string &w, const Presentation &p) {
  std::string names;
  for (std::size_t i = 0; i < p.generator_count(); ++i)
    names += (i ? "," : "") + p.generator_label(i);
  const Presentation one = parse_presentation(names + " | " + w);
  return one.relators().empty() ? Word{} : one.relators().front();
}

int cmd_enumerate(const std::string &text, const std::vector<std::string> &subgroup, bool realize_group) {
  const Presentation p = parse_presentation(text);
  std::vector<Word> words;
  for (const std::string &w : subgroup)
    words.push_back(parse_word(w, p));
  const CosetTable ct = coset_enumerate(p, words, limits_from_environment());
  std::cout << "cosets: " << ct.coset_count << "\n";
  if (realize_group && words.empty()) {
    const RealizedGroup g(ct);
    std::cout << "order: " << g.order() << "\n";
    std::cout << "abelian: " << (g.is_abelian() ? "yes" : "no") << "\n";
    std::map<std::size_t, std::size_t> census;
    for (std::uint32_t e = 0; e < g.order(); ++e)
      ++census[g.element_order(e)];
    std::cout << "element orders:";
    for (const auto &[order, count] : census)
      std::cout << " " << order << ":" << count;
    std::cout << "\n";
  }
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Tensor, exterior and commutativity degrees of finite groups"};
  app.require_subcommand(1);

  std::string group, kinds = "tensor,exterior,comm", format = "text";
  auto *degree = app.add_subcommand("degree", "Exact degrees of a named group");
  degree->add_option("--group,-g", group, "Group spec, e.g. Q8, D16, ESp(3,1), C2xC4")->required();
  degree->add_option("--kinds", kinds, "Comma list of tensor, exterior, comm");
  degree->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string tensor_format = "json";
  auto *tensor = app.add_subcommand("tensor", "Structure of the tensor and exterior squares");
  tensor->add_option("--group,-g", group, "Group spec")->required();
  tensor->add_option("--format", tensor_format, "json or text")->check(CLI::IsMember({"text", "json"}));

  VerifyOptions vopts;
  std::string suites, report, verify_format = "text";
  auto *verify = app.add_subcommand("verify", "Run the check suites over the catalog sweep");
  verify->add_option("--max-order", vopts.max_order, "Largest group order in the sweep");
  verify->add_option("--suites", suites, "Comma list of suites (default: all)");
  verify->add_option("--report", report, "Write the report here instead of stdout");
  verify->add_option("--format", verify_format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  verify->add_option("--jobs,-j", vopts.jobs, "Worker threads (0 = all cores)");
  verify->add_flag("--stretch", vopts.stretch, "Include the order-32 extraspecial closed forms");

  std::string presentation;
  std::vector<std::string> subgroup;
  bool realize_group = false;
  auto *enumerate = app.add_subcommand("enumerate", "Coset enumeration of a presentation");
  enumerate->add_option("presentation", presentation, "e.g. \"a,b | a^2, b^2, (a b)^3\"")->required();
  enumerate->add_option("--subgroup", subgroup, "Subgroup generator words (default: trivial subgroup)");
  enumerate->add_flag("--realize", realize_group, "Print order statistics of the realized group");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*degree)
      return cmd_degree(group, kinds, format);
    if (*tensor)
      return cmd_tensor(group, tensor_format);
    if (*verify)
      return cmd_verify(vopts, suites, report, verify_format);
    if (*enumerate)
      return cmd_enumerate(presentation, subgroup, realize_group);
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DomainError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceError &e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kOk;
}
