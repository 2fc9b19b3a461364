#include <CLI11.hpp>

#include "gcok/cli.hpp"

int main(int argc, char** argv) {
  using namespace gcok::cli;
  CLI::App app{"gcok: exact verifier for generalized contact, complex and Kahler structures on invariant frames"};
  app.require_subcommand(1);

  Options opts;
  std::string format = "text";
  bool twisted = false, untwisted = false;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
    auto* on = cmd->add_flag("--twisted", twisted, "use the frame's H in every bracket");
    auto* off = cmd->add_flag("--no-twisted", untwisted, "ignore the frame's H");
    on->excludes(off);
  };

  std::string path, path_b, bform, out;
  std::optional<std::string> product_out;

  auto* verify = app.add_subcommand("verify", "check axioms and classify a structure document");
  verify->add_option("path", path, "structure document")->required();
  add_common(verify);

  auto* product = app.add_subcommand("product", "build (J1, J2) on the product of two gacm documents");
  product->add_option("first", path, "first factor")->required();
  product->add_option("second", path_b, "second factor")->required();
  product->add_option("-o,--out", product_out, "write the product as a gcx_pair document");
  add_common(product);

  auto* btransform = app.add_subcommand("btransform", "apply a closed B-field to a structure document");
  btransform->add_option("path", path, "structure document")->required();
  btransform->add_option("bform", bform, "two-form document {dim, terms: [{i, j, c}]}")->required();
  btransform->add_option("-o,--out", out, "output document")->required();

  auto* catalog = app.add_subcommand("catalog", "built-in instances");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "list catalog ids");
  auto* emit = catalog->add_subcommand("emit", "write an entry as a structure document");
  std::string id;
  emit->add_option("id", id, "catalog id")->required();
  emit->add_option("path", out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : malformed;
  }

  opts.format = format == "json" ? Format::json : Format::text;
  if (twisted) opts.twisted = true;
  if (untwisted) opts.twisted = false;

  if (verify->parsed()) return cmd_verify(path, opts, std::cout, std::cerr);
  if (product->parsed()) return cmd_product(path, path_b, product_out, opts, std::cout, std::cerr);
  if (btransform->parsed()) return cmd_btransform(path, bform, out, std::cout, std::cerr);
  if (emit->parsed()) return cmd_catalog_emit(id, out, std::cout, std::cerr);
  return cmd_catalog_list(std::cout);
}
