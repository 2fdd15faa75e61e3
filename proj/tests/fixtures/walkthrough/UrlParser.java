// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

package demo.net;

public class UrlParser {
  private String scheme;
  private String host;
  private int port = -1;
  private String path;

  public UrlParser(String url) {
    int schemeEnd = url.indexOf("://");
    scheme = url.substring(0, schemeEnd);
    String rest = url.substring(schemeEnd + 3);
    int slash = rest.indexOf('/');
    String authority = slash < 0 ? rest : rest.substring(0, slash);
    path = slash < 0 ? "/" : rest.substring(slash);
    int colon = authority.indexOf(':');
    host = colon < 0 ? authority : authority.substring(0, colon);
    if (colon >= 0) port = Integer.parseInt(authority.substring(colon + 1));
  }

  public String getScheme() {
    return scheme;
  }

  public String getHost() {
    return host;
  }

  public int getPort() {
    return port;
  }

  public String getPath() {
    return path;
  }
}
