class S19 extends Abstract6 {
  public void enter() {
    if (x7 > 0) {
      if (x9 > 0) {
        new S29();
        new S4();
        new S15();
      } else {
        if (x4 > 0) {
          send("msg6");
          new S10();
          new S23();
        } else {
          new S21();
          send("msg15");
        }
      }
      new S14();
      new S12();
    } else {
      switch (event) {
        case EV286:
          if (x0 > 0) {
            send("msg6");
            new S10();
          } else {
            send("msg2");
          }
          if (x1 > 0) {
            send("msg6");
            new S7();
            new Helper();
            log("note");
          }
          break;
        case EV287:
          new S23();
          break;
      }
    }
  }
  public void exit() {
    new S1();
    new State();
    new S3();
    switch (event) {
      case EV288:
        if (x0 > 0) {
          send("msg4");
          switch (event) {
            case EV289:
              new S17();
              break;
          }
          send("msg4");
          send("msg0");
        }
        new S27();
        log("note");
        break;
      case EV290:
        if (x9 > 0) {
          if (x3 > 0) {
            log("note");
            new S5();
          } else {
            new S11();
            new S12();
            new S24();
          }
          new Helper();
          new S4();
        } else {
          send("msg7");
        }
        try {
          if (x4 > 0) {
            send("msg0");
            send("msg10");
            send("msg12");
          } else {
            log("note");
            send("msg13");
            new S13();
            new S4();
          }
          new S29();
          switch (event) {
            case EV291:
              new S23();
              new S22();
              new S28();
              new S23();
              break;
          }
        } catch (IOException e) {
          new S8();
          switch (event) {
            case EV292:
              new S9();
              send("msg16");
              send("msg8");
              break;
            case EV293:
              new S29();
              send("msg14");
              new Helper();
              send("msg5");
              break;
          }
          new S26();
          if (x1 > 0) {
            log("note");
            new S28();
            new S7();
          } else {
            new S23();
            new Helper();
            new S19();
            send("msg1");
          }
        }
        if (x1 > 0) {
          send("msg8");
          new S23();
        } else {
          try {
            new S30();
            new S8();
          } finally {
            send("msg8");
          }
        }
        if (x5 > 0) {
          log("note");
          try {
            send("msg2");
          } catch (IOException e) {
            new S25();
          }
          new S27();
          try {
            send("msg5");
            new S23();
            new S1();
            new State();
          } finally {
            new S24();
            log("note");
            send("msg11");
            new S14();
          }
        }
        break;
      case EV294:
        switch (event) {
          case EV295:
            try {
              new S21();
              send("msg18");
              new S4();
              send("msg12");
            } catch (TimeoutException e) {
              new S18();
              new S5();
              send("msg11");
              send("msg9");
            }
            new S13();
            send("msg4");
            break;
          case EV296:
            log("note");
            try {
              send("msg18");
            } catch (TimeoutException e) {
              new S22();
              new S4();
              new S3();
            } catch (IllegalStateException e) {
              new S18();
              send("msg4");
            }
            switch (event) {
              case EV297:
                new S3();
                new S13();
                send("msg18");
                send("msg12");
                break;
              case EV298:
                new S21();
                send("msg17");
                log("note");
                send("msg5");
                break;
            }
            new S12();
            break;
          case EV299:
            send("msg8");
            break;
        }
        send("msg10");
        new S16();
        break;
    }
  }
  void handle() {
    send("msg13");
    new S28();
    new S25();
  }
  void tick() {
    send("msg6");
    if (x3 > 0) {
      send("msg4");
    }
  }
  void reset() {
    try {
      new S3();
      send("msg16");
      send("msg14");
    } finally {
      send("msg1");
      new S22();
      if (x7 > 0) {
        new State();
      }
    }
    log("note");
    switch (event) {
      case EV300:
        try {
          send("msg16");
        } catch (IOException e) {
          new S9();
          new S3();
          if (x4 > 0) {
            new S27();
            new S2();
            new S3();
          }
        }
        switch (event) {
          case EV301:
            if (x8 > 0) {
              new S13();
              send("msg13");
              send("msg9");
            }
            send("msg15");
            break;
          case EV302:
            switch (event) {
              case EV303:
                send("msg11");
                new S14();
                new S25();
                break;
              case EV304:
                new S21();
                new S7();
                new S11();
                new S17();
                break;
              case EV305:
                send("msg1");
                new S11();
                new S29();
                break;
            }
            send("msg4");
            break;
          case EV306:
            new S21();
            log("note");
            break;
        }
        break;
      case EV307:
        switch (event) {
          case EV308:
            new S28();
            try {
              send("msg17");
              new S13();
            } catch (IOException e) {
              new S18();
              new S11();
            } finally {
              send("msg16");
              new S16();
              send("msg11");
            }
            if (x0 > 0) {
              new Helper();
              log("note");
            } else {
              new Helper();
              new S23();
              new S12();
              new S12();
            }
            break;
        }
        send("msg13");
        new S20();
        try {
          switch (event) {
            case EV309:
              send("msg16");
              new S13();
              break;
            case EV310:
              new Helper();
              send("msg14");
              break;
            case EV311:
              new S3();
              send("msg5");
              send("msg12");
              break;
          }
          new S27();
        } catch (IllegalStateException e) {
          new S8();
        } catch (IOException e) {
          send("msg16");
        }
        break;
      case EV312:
        new S7();
        try {
          log("note");
          send("msg0");
        } catch (IOException e) {
          new S2();
        } catch (IllegalStateException e) {
          send("msg19");
          try {
            send("msg15");
            send("msg19");
            send("msg2");
            send("msg11");
          } catch (IOException e) {
            new S15();
            new S29();
            new S12();
          } finally {
            send("msg18");
            send("msg7");
            send("msg3");
            new S12();
          }
          new S16();
        }
        send("msg15");
        break;
    }
  }
}
