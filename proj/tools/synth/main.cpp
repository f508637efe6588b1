// guideme-synth: writes the synthetic three-class image dataset.
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "guideme/error.hpp"
#include "synthetic.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate the synthetic three-class place dataset"};
  std::string out;
  guideme::synth::DatasetOptions options;
  app.add_option("--out", out, "Output root directory")->required();
  app.add_option("--per-class", options.images_per_class, "Images per class")
      ->check(CLI::Range(2, 100000));
  app.add_option("--train-fraction", options.train_fraction, "Share of images in train/")
      ->check(CLI::Range(0.01, 0.99));
  app.add_option("--size", options.size, "Image side in pixels")->check(CLI::Range(8, 4096));
  app.add_option("--noise", options.noise_amplitude, "Per-pixel noise amplitude")
      ->check(CLI::Range(0, 255));
  app.add_option("--seed", options.seed, "RNG seed");
  CLI11_PARSE(app, argc, argv);

  try {
    const auto layout = guideme::synth::write_dataset(out, options);
    if (std::getenv("QUIET") == nullptr) {
      std::cerr << "wrote " << layout.train.string() << ", " << layout.test.string()
                << ", " << layout.noise_probe.string() << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}
