#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "macgene/analysis.hpp"
#include "macgene/bmp.hpp"
#include "macgene/cipher.hpp"
#include "macgene/file_io.hpp"
#include "macgene/mac_key.hpp"
#include "macgene/system_mac.hpp"
#include "macgene/wire.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitFormat = 4;
constexpr int kExitKey = 5;

int exit_code_for(macgene::Errc code) {
  using macgene::Errc;
  switch (code) {
    case Errc::MalformedMac:
    case Errc::InterfaceNotFound:
    case Errc::NoHardwareAddress:
      return kExitKey;
    case Errc::IoError:
    case Errc::BindFailure:
    case Errc::ConnectFailure:
      return kExitIo;
    default:
      return kExitFormat;
  }
}

// Exactly one of --key / --iface, resolved to a MacKey before any data is
// touched. No key files, no environment fallback: the key is the MAC.
struct KeySpec {
  std::string literal;
  std::string interface;

  macgene::MacKey resolve() const {
    if (!literal.empty()) {
      return macgene::parse_mac(literal);
    }
    return macgene::get_system_mac(interface);
  }
};

void add_key_options(CLI::App* cmd, KeySpec& spec) {
  auto* group = cmd->add_option_group("key source");
  group->add_option("--key", spec.literal,
                    "MAC address literal, e.g. 00:A0:C9:14:C8:29");
  group->add_option("--iface", spec.interface,
                    "network interface whose hardware address is the key");
  group->require_option(1);
}

macgene::AnalysisReport analyze_raw(const std::vector<std::uint8_t>& source,
                                    const std::vector<std::uint8_t>& encrypted) {
  macgene::AnalysisReport report;
  report.snr = macgene::snr(source, encrypted);
  report.diff_ratio = macgene::diff_ratio(source, encrypted);
  report.histogram_source = macgene::histogram(source);
  report.histogram_encrypted = macgene::histogram(encrypted);
  return report;
}

macgene::AnalysisReport analyze_bmp(const std::vector<std::uint8_t>& source,
                                    const std::vector<std::uint8_t>& encrypted) {
  const auto source_img = macgene::parse_bmp(source);
  const auto encrypted_img = macgene::parse_bmp(encrypted);
  auto report = analyze_raw(macgene::pixel_bytes(source_img),
                            macgene::pixel_bytes(encrypted_img));
  const auto gray = macgene::grayscale(encrypted_img);
  using macgene::Direction;
  report.corr_horizontal = macgene::correlation(
      macgene::neighbor_pairs(gray, Direction::Horizontal));
  report.corr_vertical =
      macgene::correlation(macgene::neighbor_pairs(gray, Direction::Vertical));
  report.corr_diagonal =
      macgene::correlation(macgene::neighbor_pairs(gray, Direction::Diagonal));
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MAC-address-keyed encryption toolkit"};
  app.require_subcommand(1);

  // encrypt / decrypt
  KeySpec cipher_key;
  bool raw_mode = false;
  std::string input_path;
  std::string output_path;
  for (const bool encrypting : {true, false}) {
    auto* cmd = app.add_subcommand(
        encrypting ? "encrypt" : "decrypt",
        encrypting ? "Encrypt a file under a MAC key"
                   : "Decrypt a file encrypted under a MAC key");
    add_key_options(cmd, cipher_key);
    cmd->add_flag("--raw", raw_mode,
                  "length-preserving mode without the container header");
    cmd->add_option("input", input_path, "input file")->required();
    cmd->add_option("output", output_path, "output file")->required();
    cmd->final_callback([&, encrypting] {
      const auto key = cipher_key.resolve();
      const auto mode =
          raw_mode ? macgene::CipherMode::Raw : macgene::CipherMode::Container;
      const auto data = macgene::read_file_bytes(input_path);
      const auto result = encrypting ? macgene::encrypt(data, key, mode)
                                     : macgene::decrypt(data, key, mode);
      macgene::write_file_bytes(output_path, result);
    });
  }

  // encrypt-bmp / decrypt-bmp
  KeySpec bmp_key;
  std::string bmp_input;
  std::string bmp_output;
  for (const bool encrypting : {true, false}) {
    auto* cmd = app.add_subcommand(
        encrypting ? "encrypt-bmp" : "decrypt-bmp",
        encrypting ? "Encrypt a BMP pixel array in place, keeping it viewable"
                   : "Decrypt the pixel array of an encrypted BMP");
    add_key_options(cmd, bmp_key);
    cmd->add_option("input", bmp_input, "input .bmp file")->required();
    cmd->add_option("output", bmp_output, "output .bmp file")->required();
    cmd->final_callback([&, encrypting] {
      const auto key = bmp_key.resolve();
      const auto data = macgene::read_file_bytes(bmp_input);
      const auto result = encrypting ? macgene::encrypt_bmp_body(data, key)
                                     : macgene::decrypt_bmp_body(data, key);
      macgene::write_file_bytes(bmp_output, result);
    });
  }

  // analyze
  std::string analyze_source;
  std::string analyze_encrypted;
  bool analyze_as_bmp = false;
  {
    auto* cmd = app.add_subcommand(
        "analyze", "Report distortion metrics between two files");
    cmd->add_option("--source", analyze_source, "original file")->required();
    cmd->add_option("--encrypted", analyze_encrypted, "file to evaluate")
        ->required();
    cmd->add_flag("--bmp", analyze_as_bmp,
                  "treat inputs as BMP images: metrics over pixel content, "
                  "plus neighbor correlations of the evaluated image");
    cmd->final_callback([&] {
      const auto source = macgene::read_file_bytes(analyze_source);
      const auto encrypted = macgene::read_file_bytes(analyze_encrypted);
      const auto report = analyze_as_bmp ? analyze_bmp(source, encrypted)
                                         : analyze_raw(source, encrypted);
      std::cout << macgene::render_report(report);
    });
  }

  // histogram
  std::string histogram_path;
  {
    auto* cmd =
        app.add_subcommand("histogram", "Byte-value histogram of a file, CSV");
    cmd->add_option("file", histogram_path, "input file")->required();
    cmd->final_callback([&] {
      const auto data = macgene::read_file_bytes(histogram_path);
      std::cout << macgene::histogram_csv(macgene::histogram(data));
    });
  }

  // keyinfo
  KeySpec info_key;
  {
    auto* cmd = app.add_subcommand(
        "keyinfo", "Print the canonical form and size of a key");
    add_key_options(cmd, info_key);
    cmd->final_callback([&] {
      const auto key = info_key.resolve();
      std::cout << macgene::format_mac(key, macgene::MacStyle::Colon) << "\n"
                << "keyspace: " << macgene::kKeyBits << " bits\n";
    });
  }

  // recv
  KeySpec recv_key;
  std::uint16_t recv_port = 0;
  std::string recv_out;
  {
    auto* cmd = app.add_subcommand(
        "recv", "Receive one file encrypted under this host's MAC");
    cmd->add_option("--port", recv_port, "TCP port to listen on")->required();
    add_key_options(cmd, recv_key);
    cmd->add_option("--out", recv_out, "path for the received file")
        ->required();
    cmd->final_callback([&] {
      const auto key = recv_key.resolve();
      macgene::FileReceiver receiver(recv_port);
      const auto count = receiver.receive_one(key, recv_out);
      std::cout << "received " << count << " bytes into " << recv_out << "\n";
    });
  }

  // send
  std::string send_host;
  std::uint16_t send_port = 0;
  std::string send_file_path;
  {
    auto* cmd = app.add_subcommand(
        "send", "Send a file encrypted under the receiver's MAC");
    cmd->add_option("--host", send_host, "receiver address")->required();
    cmd->add_option("--port", send_port, "receiver TCP port")->required();
    cmd->add_option("file", send_file_path, "file to send")->required();
    cmd->final_callback([&] {
      const auto status =
          macgene::send_file(send_host, send_port, send_file_path);
      if (status == macgene::kStatusOk) {
        std::cout << "transfer complete\n";
        return;
      }
      if (status == macgene::kStatusDecryptError) {
        macgene::fail(macgene::Errc::RemoteDecryptFailure,
                      "receiver reported a decrypt failure");
      }
      macgene::fail(macgene::Errc::ProtocolViolation,
                    "receiver returned unknown status " +
                        std::to_string(status));
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const macgene::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return 0;
}
