// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

package modern.event;

public class Subject {
  private java.util.List<Observer> watchers;
  private boolean dirty;

  public Subject() {
    watchers = new java.util.ArrayList<>();
    dirty = false;
  }

  public synchronized int countObservers() {
    return watchers.size();
  }

  public synchronized boolean hasChanged() {
    return dirty;
  }

  public void notifyObservers(Object arg) {
    Object[] arrLocal;
    synchronized (this) {
      if (!dirty) return;
      arrLocal = watchers.toArray();
      clearChanged();
    }
    for (int i = arrLocal.length - 1; i >= 0; i--) ((Observer) arrLocal[i]).update(this, arg);
  }

  public void notifyObservers() {
    notifyObservers(null);
  }

  public synchronized void addObserver(Observer o) {
    if (o == null) throw new NullPointerException();
    if (!watchers.contains(o)) watchers.add(o);
  }

  public synchronized void deleteObserver(Observer o) {
    watchers.remove(o);
  }

  public synchronized void deleteObservers() {
    watchers.clear();
  }

  protected synchronized void clearChanged() {
    dirty = false;
  }

  protected synchronized void setChanged() {
    dirty = true;
  }
}
