#include "texguard/payload/probe.hpp"

#include <array>

namespace texguard::payload {

namespace {

using C = Category;
using M = Mechanism;

const std::array<ProbeSpec, 22>& catalog() {
  static const std::array<ProbeSpec, 22> kProbes = {{
      {"users", C::UserGroupNames, M::Shell, "users", EngineRequirement::Any, std::nullopt},
      {"groups", C::UserGroupNames, M::Shell, "groups", EngineRequirement::Any, std::nullopt},
      {"passwd", C::UserGroupNames, M::Shell, "cat /etc/passwd", EngineRequirement::Any, "/etc/passwd"},
      {"group", C::UserGroupNames, M::Shell, "cat /etc/group", EngineRequirement::Any, "/etc/group"},
      {"uname", C::System, M::Shell, "uname -a", EngineRequirement::Any, "/proc/version"},
      {"lshw", C::Hardware, M::Shell, "lshw -short", EngineRequirement::Any, std::nullopt},
      {"lscpu", C::Cpu, M::Shell, "lscpu", EngineRequirement::Any, "/proc/cpuinfo"},
      {"shadow", C::Passwords, M::Shell, "cat /etc/shadow", EngineRequirement::Any, "/etc/shadow"},
      {"apt_upgradable", C::OutdatedSoftware, M::Shell, "apt list --upgradable",
       EngineRequirement::Any, std::nullopt},
      {"debsecan", C::KnownVulnerabilities, M::Shell,
       "debsecan | grep \"high urgency\" | grep \"remotely exploitable\"", EngineRequirement::Any,
       std::nullopt},
      {"nmap", C::OpenPorts, M::Shell, "nmap localhost", EngineRequirement::Any, std::nullopt},
      {"netstat_listen", C::OpenPorts, M::Shell, "netstat -tulpn | grep LISTEN",
       EngineRequirement::Any, std::nullopt},
      {"ifconfig", C::NetworkInterfaces, M::Shell, "ifconfig", EngineRequirement::Any, std::nullopt},
      {"interfaces", C::NetworkInterfaces, M::Shell, "cat /etc/network/interfaces",
       EngineRequirement::Any, "/etc/network/interfaces"},
      {"protocols", C::NetworkingProtocols, M::Shell, "cat /etc/protocols", EngineRequirement::Any,
       "/etc/protocols"},
      {"iptables", C::FirewallConfigurations, M::Shell, "iptables -S", EngineRequirement::Any,
       std::nullopt},
      {"netstat_routes", C::RoutingTables, M::Shell, "netstat -rn", EngineRequirement::Any,
       std::nullopt},
      {"sshd_config", C::ServerConfiguration, M::Shell, "cat /etc/ssh/sshd_config",
       EngineRequirement::Any, "/etc/ssh/sshd_config"},
      {"apache2_conf", C::ServerConfiguration, M::Shell, "cat /etc/apache2/apache2.conf",
       EngineRequirement::Any, "/etc/apache2/apache2.conf"},
      {"htpasswd", C::WebPasswords, M::Shell, "cat /etc/apache2/.htpasswd", EngineRequirement::Any,
       "/etc/apache2/.htpasswd"},
      // A glob cannot be opened by TeX, so this one has no file route.
      {"ssh_keys", C::SslCertificates, M::Shell, "cat /etc/ssh/*_key", EngineRequirement::Any,
       std::nullopt},
      {"hosts_file", C::Hostnames, M::FileRead, "/etc/hosts", EngineRequirement::Any, std::nullopt},
  }};
  return kProbes;
}

}  // namespace

std::string_view mechanism_name(Mechanism mechanism) {
  switch (mechanism) {
    case Mechanism::Shell: return "shell";
    case Mechanism::FileRead: return "file_read";
    case Mechanism::Lua: return "lua";
  }
  return "";
}

std::string_view engine_requirement_name(EngineRequirement requirement) {
  switch (requirement) {
    case EngineRequirement::Any: return "any";
    case EngineRequirement::PdfTex: return "pdftex";
    case EngineRequirement::LuaTex: return "luatex";
  }
  return "";
}

std::span<const ProbeSpec> list_probes() { return catalog(); }

const ProbeSpec* find_probe(std::string_view id, std::span<const ProbeSpec> probes) {
  for (const auto& probe : probes) {
    if (probe.id == id) return &probe;
  }
  return nullptr;
}

}  // namespace texguard::payload
