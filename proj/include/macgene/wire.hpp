#pragma once

#include <cerrno>
#include <cstdint>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include "macgene/cipher.hpp"
#include "macgene/endian.hpp"
#include "macgene/error.hpp"
#include "macgene/file_io.hpp"
#include "macgene/mac_key.hpp"

namespace macgene {

// Demonstration transfer protocol. The receiver volunteers its MAC in the
// clear ("MKX1" + 6 key bytes); the sender answers with one Container-mode
// file frame ("MKF1" + u64 big-endian payload length + envelope); the
// receiver finishes with a single status byte. Anyone who can observe the
// hello frame holds the entire key -- that is a property of keying on the
// MAC address, and the protocol makes no attempt to hide it.

inline constexpr std::array<std::uint8_t, 4> kHelloMagic = {'M', 'K', 'X', '1'};
inline constexpr std::array<std::uint8_t, 4> kFileMagic = {'M', 'K', 'F', '1'};
inline constexpr std::size_t kHelloFrameBytes = 10;
inline constexpr std::size_t kFileFrameHeaderBytes = 12;
inline constexpr std::uint64_t kMaxPayloadBytes = 64ULL << 20;
inline constexpr std::uint8_t kStatusOk = 0x00;
inline constexpr std::uint8_t kStatusDecryptError = 0x01;
inline constexpr int kDefaultTimeoutSeconds = 30;

namespace detail {

class Socket {
 public:
  Socket() = default;
  explicit Socket(int fd) : fd_(fd) {}
  Socket(Socket&& other) noexcept : fd_(std::exchange(other.fd_, -1)) {}
  Socket& operator=(Socket&& other) noexcept {
    if (this != &other) {
      close_fd();
      fd_ = std::exchange(other.fd_, -1);
    }
    return *this;
  }
  Socket(const Socket&) = delete;
  Socket& operator=(const Socket&) = delete;
  ~Socket() { close_fd(); }

  int fd() const { return fd_; }
  bool valid() const { return fd_ >= 0; }

 private:
  void close_fd() {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

  int fd_ = -1;
};

inline void set_io_timeout(int fd, int seconds) {
  timeval tv{};
  tv.tv_sec = seconds;
  ::setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof(tv));
  ::setsockopt(fd, SOL_SOCKET, SO_SNDTIMEO, &tv, sizeof(tv));
}

inline void read_exact(int fd, std::uint8_t* buf, std::size_t n) {
  std::size_t got = 0;
  while (got < n) {
    const ssize_t r = ::recv(fd, buf + got, n - got, 0);
    if (r == 0) {
      fail(Errc::ProtocolViolation,
           "peer closed connection mid-frame (" + std::to_string(got) + " of " +
               std::to_string(n) + " bytes)");
    }
    if (r < 0) {
      if (errno == EINTR) continue;
      if (errno == EAGAIN || errno == EWOULDBLOCK) {
        fail(Errc::ProtocolViolation, "read timed out");
      }
      fail(Errc::ProtocolViolation,
           std::string("read failed: ") + std::strerror(errno));
    }
    got += static_cast<std::size_t>(r);
  }
}

inline void write_all(int fd, const std::uint8_t* buf, std::size_t n) {
  std::size_t sent = 0;
  while (sent < n) {
    const ssize_t w = ::send(fd, buf + sent, n - sent, MSG_NOSIGNAL);
    if (w < 0) {
      if (errno == EINTR) continue;
      fail(Errc::ProtocolViolation,
           std::string("write failed: ") + std::strerror(errno));
    }
    sent += static_cast<std::size_t>(w);
  }
}

}  // namespace detail

// One-shot receiver. Construction binds and listens; receive_one() serves a
// single connection to completion. Connections are handled strictly
// sequentially, so there is no shared state to protect.
class FileReceiver {
 public:
  explicit FileReceiver(std::uint16_t port,
                        int timeout_seconds = kDefaultTimeoutSeconds)
      : timeout_seconds_(timeout_seconds) {
    listener_ = detail::Socket(::socket(AF_INET, SOCK_STREAM, 0));
    if (!listener_.valid()) {
      fail(Errc::BindFailure,
           std::string("cannot create socket: ") + std::strerror(errno));
    }
    const int one = 1;
    ::setsockopt(listener_.fd(), SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_ANY);
    addr.sin_port = htons(port);
    if (::bind(listener_.fd(), reinterpret_cast<sockaddr*>(&addr),
               sizeof(addr)) != 0) {
      fail(Errc::BindFailure, "cannot bind port " + std::to_string(port) +
                                  ": " + std::strerror(errno));
    }
    if (::listen(listener_.fd(), 1) != 0) {
      fail(Errc::BindFailure,
           std::string("cannot listen: ") + std::strerror(errno));
    }
  }

  // The actual bound port; useful when constructed with port 0.
  std::uint16_t port() const {
    sockaddr_in addr{};
    socklen_t len = sizeof(addr);
    ::getsockname(listener_.fd(), reinterpret_cast<sockaddr*>(&addr), &len);
    return ntohs(addr.sin_port);
  }

  // Serves one connection: sends the hello frame, reads one file frame,
  // decrypts it with `key`, writes the plaintext to `output_path`, and
  // answers with a status byte. Returns the decrypted byte count.
  //
  // Nothing is written to output_path unless decryption succeeds.
  std::uint64_t receive_one(const MacKey& key, const std::string& output_path) {
    detail::Socket conn(::accept(listener_.fd(), nullptr, nullptr));
    if (!conn.valid()) {
      fail(Errc::BindFailure,
           std::string("accept failed: ") + std::strerror(errno));
    }
    detail::set_io_timeout(conn.fd(), timeout_seconds_);

    std::array<std::uint8_t, kHelloFrameBytes> hello;
    std::copy(kHelloMagic.begin(), kHelloMagic.end(), hello.begin());
    std::copy(key.bytes.begin(), key.bytes.end(),
              hello.begin() + kHelloMagic.size());
    detail::write_all(conn.fd(), hello.data(), hello.size());

    std::array<std::uint8_t, kFileFrameHeaderBytes> header;
    detail::read_exact(conn.fd(), header.data(), header.size());
    if (!std::equal(kFileMagic.begin(), kFileMagic.end(), header.begin())) {
      fail(Errc::ProtocolViolation, "file frame has bad magic");
    }
    const std::uint64_t payload_length = load_be64(header.data() + 4);
    if (payload_length > kMaxPayloadBytes) {
      fail(Errc::ProtocolViolation,
           "declared payload of " + std::to_string(payload_length) +
               " bytes exceeds the " + std::to_string(kMaxPayloadBytes) +
               " byte limit");
    }
    std::vector<std::uint8_t> payload(payload_length);
    detail::read_exact(conn.fd(), payload.data(), payload.size());

    std::vector<std::uint8_t> plaintext;
    try {
      plaintext = decrypt(payload, key, CipherMode::Container);
    } catch (const Error& e) {
      const std::uint8_t status = kStatusDecryptError;
      detail::write_all(conn.fd(), &status, 1);
      fail(Errc::DecryptFailure,
           std::string("payload did not decrypt: ") + e.what());
    }

    write_file_bytes(output_path, plaintext);
    const std::uint8_t status = kStatusOk;
    detail::write_all(conn.fd(), &status, 1);
    return plaintext.size();
  }

 private:
  detail::Socket listener_;
  int timeout_seconds_;
};

// Binds `port`, serves exactly one transfer, returns the byte count written.
inline std::uint64_t serve_receive(std::uint16_t port, const MacKey& key,
                                   const std::string& output_path,
                                   int timeout_seconds = kDefaultTimeoutSeconds) {
  FileReceiver receiver(port, timeout_seconds);
  return receiver.receive_one(key, output_path);
}

// Connects to a receiver, takes the key from its hello frame, sends the file
// in Container mode, and returns the receiver's status byte (0x00 success,
// 0x01 remote decrypt failure).
inline std::uint8_t send_file(const std::string& host, std::uint16_t port,
                              const std::string& input_path,
                              int timeout_seconds = kDefaultTimeoutSeconds) {
  const auto content = read_file_bytes(input_path);

  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* found = nullptr;
  if (::getaddrinfo(host.c_str(), std::to_string(port).c_str(), &hints,
                    &found) != 0 ||
      found == nullptr) {
    fail(Errc::ConnectFailure, "cannot resolve host '" + host + "'");
  }
  struct Guard {
    addrinfo* p;
    ~Guard() { freeaddrinfo(p); }
  } guard{found};

  detail::Socket conn(
      ::socket(found->ai_family, found->ai_socktype, found->ai_protocol));
  if (!conn.valid()) {
    fail(Errc::ConnectFailure,
         std::string("cannot create socket: ") + std::strerror(errno));
  }
  detail::set_io_timeout(conn.fd(), timeout_seconds);
  if (::connect(conn.fd(), found->ai_addr, found->ai_addrlen) != 0) {
    fail(Errc::ConnectFailure, "cannot connect to " + host + ":" +
                                   std::to_string(port) + ": " +
                                   std::strerror(errno));
  }

  std::array<std::uint8_t, kHelloFrameBytes> hello;
  detail::read_exact(conn.fd(), hello.data(), hello.size());
  if (!std::equal(kHelloMagic.begin(), kHelloMagic.end(), hello.begin())) {
    fail(Errc::ProtocolViolation, "hello frame has bad magic");
  }
  MacKey key;
  std::copy(hello.begin() + kHelloMagic.size(), hello.end(),
            key.bytes.begin());

  const auto envelope = encrypt(content, key, CipherMode::Container);
  std::array<std::uint8_t, kFileFrameHeaderBytes> header;
  std::copy(kFileMagic.begin(), kFileMagic.end(), header.begin());
  store_be64(envelope.size(), header.data() + 4);
  detail::write_all(conn.fd(), header.data(), header.size());
  detail::write_all(conn.fd(), envelope.data(), envelope.size());

  std::uint8_t status = 0;
  detail::read_exact(conn.fd(), &status, 1);
  return status;
}

}  // namespace macgene
