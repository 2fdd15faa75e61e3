// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

package legacy.text;

public class StringTokenizer {
  private int currentPosition;
  private int maxPosition;
  private String str;
  private String delimiters;

  public StringTokenizer(String str, String delim) {
    this.str = str;
    this.delimiters = delim;
    currentPosition = 0;
    maxPosition = str.length();
  }

  private int skipDelimiters(int startPos) {
    int position = startPos;
    while (position < maxPosition && delimiters.indexOf(str.charAt(position)) >= 0) position++;
    return position;
  }

  private int scanToken(int startPos) {
    int position = startPos;
    while (position < maxPosition && delimiters.indexOf(str.charAt(position)) < 0) position++;
    return position;
  }

  public boolean hasMoreTokens() {
    return skipDelimiters(currentPosition) < maxPosition;
  }

  public String nextToken() {
    currentPosition = skipDelimiters(currentPosition);
    if (currentPosition >= maxPosition) throw new NoSuchElementException();
    int start = currentPosition;
    currentPosition = scanToken(currentPosition);
    return str.substring(start, currentPosition);
  }

  public String nextToken(String delim) {
    delimiters = delim;
    return nextToken();
  }

  public int countTokens() {
    int count = 0;
    int currpos = currentPosition;
    while (currpos < maxPosition) {
      currpos = skipDelimiters(currpos);
      if (currpos >= maxPosition) break;
      currpos = scanToken(currpos);
      count++;
    }
    return count;
  }
}
