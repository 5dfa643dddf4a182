class S25 extends Abstract5 {
  void enter() {
    new S28();
    new S2();
    if (x1 > 0) {
      new State();
      try {
        send("msg4");
        if (x8 > 0) {
          new S11();
          send("msg4");
        }
        new S22();
      } finally {
        send("msg10");
        switch (event) {
          case EV408:
            new S7();
            break;
          case EV409:
            new S9();
            send("msg14");
            new S7();
            break;
          case EV410:
            new S27();
            new S1();
            log("note");
            new S20();
            break;
        }
        new S3();
        send("msg13");
      }
    }
    if (x3 > 0) {
      try {
        log("note");
        switch (event) {
          case EV411:
            send("msg6");
            send("msg1");
            log("note");
            break;
        }
        send("msg13");
      } catch (TimeoutException e) {
        log("note");
        send("msg7");
        log("note");
      } catch (IllegalStateException e) {
        new S29();
        if (x4 > 0) {
          new S14();
          new S19();
        } else {
          send("msg9");
          send("msg6");
          new S23();
        }
        new S11();
      }
    }
  }
  void exit() {
    new S4();
    log("note");
    try {
      if (x2 > 0) {
        new S10();
        try {
          new S29();
          new S25();
          new S2();
        } catch (TimeoutException e) {
          new S28();
          new S1();
        } finally {
          new S2();
        }
        new S26();
        switch (event) {
          case EV412:
            new S5();
            new S10();
            new S15();
            new S16();
            break;
          case EV413:
            send("msg6");
            new S2();
            send("msg1");
            break;
        }
      } else {
        try {
          new S19();
          send("msg12");
        } catch (IOException e) {
          send("msg18");
        }
      }
    } catch (IOException e) {
      new S2();
      switch (event) {
        case EV414:
          new S25();
          new S14();
          switch (event) {
            case EV415:
              send("msg11");
              break;
            case EV416:
              send("msg18");
              new State();
              new S13();
              send("msg2");
              break;
          }
          send("msg6");
          break;
        case EV417:
          new S11();
          new S28();
          send("msg18");
          try {
            new S10();
            new S2();
          } catch (TimeoutException e) {
            new S23();
            new S11();
            log("note");
          } catch (IllegalStateException e) {
            send("msg16");
          }
          break;
      }
    }
    log("note");
  }
  void handle() {
    new Helper();
    new S3();
    if (x2 > 0) {
      switch (event) {
        case EV418:
          new S21();
          break;
        case EV419:
          switch (event) {
            case EV420:
              send("msg17");
              new S2();
              send("msg9");
              break;
            case EV421:
              send("msg9");
              break;
          }
          switch (event) {
            case EV422:
              new S12();
              new S20();
              log("note");
              send("msg1");
              break;
            case EV423:
              new S25();
              new S3();
              send("msg0");
              send("msg4");
              break;
            case EV424:
              new S30();
              new S27();
              send("msg8");
              new S28();
              break;
          }
          send("msg4");
          break;
        case EV425:
          log("note");
          send("msg10");
          break;
      }
      new S3();
    } else {
      send("msg15");
      if (x5 > 0) {
        new S23();
      } else {
        try {
          new S6();
          send("msg8");
          send("msg14");
          send("msg17");
        } catch (TimeoutException e) {
          new S16();
          new S13();
          new S26();
          send("msg12");
        } catch (TimeoutException e) {
          new S3();
          send("msg1");
        }
        new S5();
        send("msg14");
      }
    }
  }
  public void tick() {
    send("msg14");
    try {
      if (x1 > 0) {
        send("msg0");
        new Helper();
        switch (event) {
          case EV426:
            new S2();
            new S21();
            send("msg18");
            break;
        }
        new S1();
      } else {
        if (x8 > 0) {
          new S6();
          send("msg19");
          send("msg7");
          send("msg15");
        } else {
          new S22();
        }
        send("msg7");
        send("msg5");
        log("note");
      }
      new S26();
      if (x2 > 0) {
        switch (event) {
          case EV427:
            send("msg8");
            new S16();
            log("note");
            break;
        }
        send("msg4");
        send("msg9");
        new S15();
      }
      new S1();
    } finally {
      send("msg14");
      send("msg12");
    }
    new S8();
    new Helper();
  }
  public void reset() {
    try {
      send("msg15");
    } catch (IllegalStateException e) {
      switch (event) {
        case EV428:
          if (x3 > 0) {
            new S21();
            new S30();
            send("msg4");
          } else {
            new S15();
            log("note");
            new S28();
            new S28();
          }
          send("msg10");
          new S7();
          break;
        case EV429:
          send("msg16");
          log("note");
          break;
        case EV430:
          new S13();
          send("msg9");
          new S10();
          send("msg8");
          break;
      }
      try {
        new State();
        try {
          send("msg16");
          new S9();
        } catch (TimeoutException e) {
          log("note");
          new S4();
          send("msg9");
          log("note");
        } finally {
          send("msg19");
          new S15();
          send("msg4");
        }
      } catch (IOException e) {
        send("msg18");
        new State();
        try {
          new Helper();
        } catch (TimeoutException e) {
          new S7();
          new S18();
        } catch (TimeoutException e) {
          new S15();
          send("msg19");
          send("msg14");
        }
      } finally {
        switch (event) {
          case EV431:
            new S10();
            break;
        }
      }
      send("msg4");
      send("msg10");
    } catch (TimeoutException e) {
      if (x5 > 0) {
        try {
          send("msg19");
          new S22();
          new S18();
        } finally {
          send("msg12");
        }
        try {
          send("msg18");
        } catch (IOException e) {
          new State();
          new S12();
          new S3();
          new S12();
        } catch (IOException e) {
          new S16();
          log("note");
          new Helper();
        }
        new S15();
      }
      new S30();
      try {
        send("msg6");
        new S14();
      } catch (IOException e) {
        new S28();
      } finally {
        new S28();
        new S30();
      }
      new S20();
    }
  }
}
