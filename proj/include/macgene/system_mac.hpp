#pragma once

#include <cstring>
#include <string>

#include <ifaddrs.h>
#include <netpacket/packet.h>
#include <sys/socket.h>

#include "macgene/error.hpp"
#include "macgene/mac_key.hpp"

namespace macgene {

// Reads the hardware address of a named network interface. This is the only
// OS-dependent entry point in the library; everything downstream of it works
// on a plain MacKey.
//
// Interfaces that exist but carry no usable 6-byte address (loopback reports
// all zeros) yield NoHardwareAddress.
inline MacKey get_system_mac(const std::string& interface_name) {
  ifaddrs* list = nullptr;
  if (getifaddrs(&list) != 0) {
    fail(Errc::InterfaceNotFound, "cannot enumerate network interfaces");
  }
  struct Guard {
    ifaddrs* p;
    ~Guard() { freeifaddrs(p); }
  } guard{list};

  bool name_seen = false;
  for (const ifaddrs* ifa = list; ifa != nullptr; ifa = ifa->ifa_next) {
    if (ifa->ifa_name == nullptr || interface_name != ifa->ifa_name) continue;
    name_seen = true;
    if (ifa->ifa_addr == nullptr || ifa->ifa_addr->sa_family != AF_PACKET) {
      continue;
    }
    const auto* link = reinterpret_cast<const sockaddr_ll*>(ifa->ifa_addr);
    if (link->sll_halen != kKeyBytes) continue;
    MacKey key;
    std::memcpy(key.bytes.data(), link->sll_addr, kKeyBytes);
    if (key == MacKey{}) continue;  // all-zero address, e.g. loopback
    return key;
  }

  if (name_seen) {
    fail(Errc::NoHardwareAddress,
         "interface '" + interface_name + "' has no usable hardware address");
  }
  fail(Errc::InterfaceNotFound,
       "no such network interface: '" + interface_name + "'");
}

}  // namespace macgene
