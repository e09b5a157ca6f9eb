#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "commands.h"
#include "parasense/disambig.h"
#include "parasense/error.h"
#include "parasense/eval.h"
#include "parasense/serialize.h"

namespace parasense::cli {

void add_disambiguate(CLI::App& app) {
  struct Args {
    std::string model, word;
    std::vector<std::string> context;
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("disambiguate",
                                 "Sense posterior of a word in context");
  cmd->add_option("-m,--model", a->model, "Model file")->required();
  cmd->add_option("-w,--word", a->word, "Target word")->required();
  cmd->add_option("context", a->context, "Context words");
  cmd->callback([a] {
    const auto model = load_model(a->model);
    const auto q = disambiguate(model, a->word, a->context);
    const auto w = *model.vocab.en_id(a->word);
    for (auto k : active_senses(model, w)) {
      std::cout << a->word << '#' << (k + 1) << '\t' << q.probs[k] << '\n';
    }
    std::cout << "argmax\t" << a->word << '#' << (q.argmax() + 1) << '\n';
  });
}

void add_wsi(CLI::App& app) {
  struct Args {
    std::string model, data, aggregate = "macro";
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("wsi", "Word sense induction ARI on a TSV set");
  cmd->add_option("-m,--model", a->model, "Model file")->required();
  cmd->add_option("-d,--data", a->data, "target<TAB>gold<TAB>context TSV")
      ->required();
  cmd->add_option("--aggregate", a->aggregate, "macro or pooled")
      ->check(CLI::IsMember({"macro", "pooled"}));
  cmd->callback([a] {
    const auto model = load_model(a->model);
    const auto instances = read_wsi_tsv(a->data);
    const auto report = wsi_evaluate(
        model, instances,
        a->aggregate == "pooled" ? AriAggregation::kPooled : AriAggregation::kMacro);
    for (const auto& w : report.per_word) {
      std::cout << w.word << '\t' << w.instances << '\t' << w.ari << '\n';
    }
    for (const auto& s : report.skipped) std::cout << "skipped\t" << s << '\n';
    std::cout << "average\t" << report.average << '\n';
  });
}

void add_simeval(CLI::App& app) {
  struct Args {
    std::string model, data, mode = "weighted";
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand(
      "simeval", "Spearman correlation of contextual similarity with ratings");
  cmd->add_option("-m,--model", a->model, "Model file")->required();
  cmd->add_option("-d,--data", a->data, "w1<TAB>ctx1<TAB>w2<TAB>ctx2<TAB>score TSV")
      ->required();
  cmd->add_option("--mode", a->mode, "weighted or max")
      ->check(CLI::IsMember({"weighted", "max"}));
  cmd->callback([a] {
    const auto model = load_model(a->model);
    const auto items = read_similarity_tsv(a->data);
    const auto mode =
        a->mode == "max" ? SimilarityMode::kMaxSense : SimilarityMode::kWeighted;
    std::vector<double> predicted, human;
    std::size_t skipped = 0;
    for (const auto& it : items) {
      if (!model.vocab.en_id(it.w1) || !model.vocab.en_id(it.w2)) {
        ++skipped;
        continue;
      }
      predicted.push_back(
          contextual_similarity(model, it.w1, it.ctx1, it.w2, it.ctx2, mode));
      human.push_back(it.human);
    }
    std::cout << "pairs\t" << predicted.size() << "\nskipped\t" << skipped
              << "\nspearman\t" << spearman(predicted, human) << '\n';
  });
}

void add_neighbors(CLI::App& app) {
  struct Args {
    std::string model, word;
    std::size_t sense = 1, top = 10;
    bool foreign = false;
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("neighbors", "Nearest neighbours of a sense");
  cmd->add_option("-m,--model", a->model, "Model file")->required();
  cmd->add_option("-w,--word", a->word, "Target word")->required();
  cmd->add_option("-k,--sense", a->sense, "Sense number, 1-based")
      ->check(CLI::PositiveNumber);
  cmd->add_option("-n,--top", a->top, "Number of neighbours");
  cmd->add_flag("--foreign", a->foreign, "Include foreign word vectors");
  cmd->callback([a] {
    const auto model = load_model(a->model);
    for (const auto& n :
         nearest_neighbors(model, a->word, a->sense - 1, a->top, a->foreign)) {
      std::cout << n.label << '\t' << n.cosine << '\n';
    }
  });
}

void add_export(CLI::App& app) {
  struct Args {
    std::string model, out = "-";
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("export", "Write active sense vectors as text");
  cmd->add_option("-m,--model", a->model, "Model file")->required();
  cmd->add_option("-o,--out", a->out, "Output path, - for standard output");
  cmd->callback([a] {
    const auto model = load_model(a->model);
    if (a->out == "-") {
      export_text(model, std::cout);
    } else {
      export_text(model, a->out);
    }
  });
}

}  // namespace parasense::cli
