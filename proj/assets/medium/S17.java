class S17 extends Abstract1 {
  void enter() {
    new S15();
    new S27();
    send("msg7");
  }
  public void exit() {
    send("msg2");
    try {
      new S19();
      new S22();
      if (x9 > 0) {
        send("msg17");
        try {
          send("msg2");
          new S23();
        } finally {
          new S26();
        }
        send("msg13");
        new S16();
      }
    } finally {
      new S20();
      switch (event) {
        case EV247:
          new S26();
          try {
            log("note");
            new Helper();
          } catch (IllegalStateException e) {
            log("note");
            new S9();
            new S16();
          } catch (IllegalStateException e) {
            send("msg1");
            send("msg10");
            new S29();
            new S6();
          }
          break;
        case EV248:
          new S1();
          new S2();
          send("msg12");
          send("msg0");
          break;
      }
    }
    try {
      if (x7 > 0) {
        new S22();
      }
      new S25();
      send("msg1");
    } catch (TimeoutException e) {
      if (x5 > 0) {
        log("note");
        new S20();
        new S10();
      }
      switch (event) {
        case EV249:
          new Helper();
          try {
            new S2();
            new S11();
            new S28();
          } catch (IOException e) {
            new S14();
            new S16();
            new S4();
            send("msg15");
          } finally {
            new S5();
            new S17();
            new S30();
            new S5();
          }
          if (x1 > 0) {
            send("msg9");
            new S12();
            new S6();
            new S27();
          } else {
            log("note");
            send("msg0");
            new S29();
            log("note");
          }
          break;
        case EV250:
          new S5();
          if (x0 > 0) {
            new S28();
            log("note");
          } else {
            log("note");
          }
          break;
        case EV251:
          try {
            new S28();
            new S18();
            new S9();
          } catch (IOException e) {
            new S30();
            send("msg14");
            send("msg11");
            send("msg17");
          } finally {
            send("msg9");
            new S18();
          }
          break;
      }
      if (x3 > 0) {
        switch (event) {
          case EV252:
            new S28();
            log("note");
            break;
        }
        send("msg9");
        try {
          new S14();
        } catch (IOException e) {
          send("msg15");
        }
      }
    } finally {
      if (x8 > 0) {
        send("msg19");
        switch (event) {
          case EV253:
            new S26();
            new S25();
            break;
        }
        switch (event) {
          case EV254:
            send("msg18");
            new S25();
            new S3();
            break;
        }
      } else {
        send("msg5");
        switch (event) {
          case EV255:
            send("msg15");
            new S7();
            new S8();
            new S8();
            break;
          case EV256:
            new S9();
            send("msg4");
            break;
          case EV257:
            new S12();
            break;
        }
        new S3();
      }
    }
  }
  void handle() {
    log("note");
    if (x6 > 0) {
      send("msg11");
      new S22();
      log("note");
      new S9();
    }
    if (x7 > 0) {
      try {
        switch (event) {
          case EV258:
            send("msg1");
            new S17();
            break;
        }
        try {
          send("msg8");
          new S8();
          new S21();
        } finally {
          new State();
          send("msg18");
          send("msg15");
        }
      } catch (IllegalStateException e) {
        new S8();
        switch (event) {
          case EV259:
            send("msg4");
            new S2();
            break;
          case EV260:
            send("msg4");
            new S12();
            send("msg1");
            log("note");
            break;
          case EV261:
            send("msg9");
            log("note");
            new S28();
            log("note");
            break;
        }
        switch (event) {
          case EV262:
            new S2();
            break;
        }
      }
    }
  }
  void tick() {
    if (x7 > 0) {
      if (x7 > 0) {
        send("msg3");
        switch (event) {
          case EV263:
            send("msg10");
            new S1();
            break;
        }
        log("note");
      } else {
        try {
          send("msg3");
          new S7();
        } finally {
          send("msg15");
        }
        new S19();
        new S18();
      }
    } else {
      if (x7 > 0) {
        send("msg8");
        send("msg8");
      } else {
        send("msg4");
        if (x3 > 0) {
          new S16();
          log("note");
          new S24();
        }
        try {
          new S4();
        } finally {
          send("msg5");
          new S26();
        }
        switch (event) {
          case EV264:
            send("msg2");
            send("msg0");
            new State();
            break;
        }
      }
      send("msg11");
      new S10();
    }
  }
  void reset() {
    new S10();
    new S28();
    if (x4 > 0) {
      try {
        log("note");
      } catch (IllegalStateException e) {
        new S14();
        if (x4 > 0) {
          new S12();
          send("msg14");
          log("note");
          send("msg9");
        }
        new S13();
        new S13();
      } catch (IllegalStateException e) {
        new S23();
        try {
          send("msg3");
          new S29();
          send("msg14");
          send("msg3");
        } catch (IllegalStateException e) {
          new S30();
          new S5();
          new S7();
          new S7();
        }
        new Helper();
        send("msg8");
      }
    } else {
      send("msg0");
      new S28();
      if (x7 > 0) {
        send("msg18");
        switch (event) {
          case EV265:
            send("msg9");
            send("msg14");
            new S18();
            new S30();
            break;
          case EV266:
            log("note");
            send("msg9");
            new S22();
            break;
          case EV267:
            new S19();
            break;
        }
        switch (event) {
          case EV268:
            send("msg13");
            break;
        }
        try {
          new S28();
          new S20();
          new S15();
        } catch (IOException e) {
          new S27();
          log("note");
          send("msg11");
          new S8();
        }
      }
      new S28();
    }
    try {
      new State();
      send("msg11");
      try {
        if (x4 > 0) {
          new S16();
          log("note");
          new State();
          new S15();
        } else {
          log("note");
          new S24();
          new S19();
        }
        new State();
      } catch (IOException e) {
        new S9();
        switch (event) {
          case EV269:
            new S18();
            new S29();
            new S30();
            new S6();
            break;
        }
      }
      send("msg19");
    } catch (TimeoutException e) {
      new S24();
      if (x2 > 0) {
        switch (event) {
          case EV270:
            new S20();
            new S10();
            new S19();
            new S5();
            break;
          case EV271:
            send("msg18");
            break;
        }
        send("msg10");
      } else {
        if (x7 > 0) {
          new S1();
          new S25();
          new S9();
        } else {
          new S5();
          send("msg13");
          send("msg9");
        }
        switch (event) {
          case EV272:
            new S28();
            new S1();
            new S18();
            break;
        }
        send("msg8");
      }
      log("note");
      send("msg7");
    }
  }
}
